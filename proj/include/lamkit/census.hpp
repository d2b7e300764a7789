#pragma once

// Sibling collections up to rotation, the bijection with plane bicolored
// trees, and the census cross-check against the closed-form count.

#include <vector>

#include "lamkit/portrait.hpp"
#include "lamkit/tree.hpp"

namespace lamkit {

// Image leaf used when none is given: (1/(8d), 3/(8d)). No preimage leaf of
// it has length a multiple of 1/(2d).
Chord default_image(int d);

// x_i -> x_{i+r}, y_j -> y_{j+r}.
std::vector<int> rotate_matching(const std::vector<int>& match, int r);

// Least rotation of the matching (lexicographic).
std::vector<int> canonical_matching(const std::vector<int>& match);

// One representative per rotation class, sorted.
std::vector<std::vector<int>> matching_classes(int d);

// (1/d) * sum over rotations r of the number of matchings fixed by r.
// Throws std::logic_error if the sum is not divisible by d.
long burnside_matching_count(int d);

// The unique portrait over `image` whose dual tree is t up to rotation.
SiblingPortrait tree_to_portrait(const PlaneBicoloredTree& t, const Chord& image);

struct CensusReport {
  int d = 0;
  long total = 0;         // all collections, Catalan(d)
  long catalan = 0;
  long classes = 0;       // orbit count of matchings under rotation
  long burnside = 0;
  long formula = 0;       // N(d)
  long trees = 0;         // rotation classes of plane bicolored trees
  long with_strip = 0;    // classes with a nonempty central strip
  bool duals_match = false;  // dual trees of the classes are exactly the tree classes
  bool ok = false;
};

CensusReport census_crosscheck(int d);
CensusReport census_crosscheck(int d, const Chord& image);

}  // namespace lamkit
