#pragma once

// Full sibling collections over an image leaf, their portraits (the d+1
// complementary regions classified C or R), central strips and dual trees.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamkit/angle.hpp"
#include "lamkit/leaf.hpp"
#include "lamkit/tree.hpp"

namespace lamkit {

struct DegenerateImageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DiameterImageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// A leaf whose length is a multiple of 1/(2d) produces arcs that are neither
// short nor long.
struct BoundaryLeafError : std::domain_error {
  using std::domain_error::domain_error;
};

// Closed ccw arc between consecutive preimage points. `index` is the
// position of `start` in SiblingCollection::points.
struct Arc {
  int index = 0;
  Angle start;
  Angle end;
  Rational length;
};

struct SiblingCollection {
  int d = 2;
  Chord image;
  // Image endpoints with the ccw arc (x, y) the shorter one.
  Angle x;
  Angle y;
  // x_1, y_1, x_2, y_2, ..., x_d, y_d in ccw order starting at x / d.
  std::vector<Angle> points;
  // Leaf i joins x_{i} (points[2i]) to y_{match[i]} (points[2*match[i]+1]).
  std::vector<int> match;
  std::vector<Chord> leaves;

  Rational short_arc() const;
  Rational long_arc() const;
  // Leaf id at points[index].
  int leaf_at(int index) const;
  // Index of the other endpoint of the leaf at points[index].
  int partner(int index) const;
};

// Validates the image leaf and returns its endpoints oriented (x, y).
std::array<Angle, 2> oriented_image(const Chord& image);

// 2d preimage points alternating x-preimages and y-preimages ccw.
std::vector<Angle> preimage_endpoints(int d, const Chord& image);

// All non-crossing perfect matchings of x_i with y_j, as match vectors.
std::vector<std::vector<int>> noncrossing_matchings(int d);

// Throws std::invalid_argument when match is not a non-crossing permutation.
SiblingCollection make_collection(int d, const Chord& image, std::vector<int> match);

// Rebuilds a collection from d explicit leaves. Throws std::invalid_argument
// when they do not all map onto one image or are not pairwise disjoint.
SiblingCollection collection_from_leaves(int d, const std::vector<Chord>& leaves);

std::vector<SiblingCollection> enumerate_sibling_collections(int d, const Chord& image);

struct Region {
  RegionKind kind = RegionKind::C;
  int degree = 0;
  // Arcs in ccw boundary order; leaves[i] follows arcs[i] on the boundary.
  std::vector<Arc> arcs;
  std::vector<int> leaves;
  std::vector<Chord> boundary_leaves;
};

struct SiblingPortrait {
  SiblingCollection collection;
  std::vector<Region> regions;
  // Region containing arc i (from points[i] to points[i+1]).
  std::vector<int> arc_region;
  // The two regions on either side of each leaf.
  std::vector<std::array<int, 2>> leaf_regions;
};

// Throws BoundaryLeafError for a leaf of length k/(2d); throws
// std::logic_error if a region mixes short and long arcs.
SiblingPortrait build_portrait(const SiblingCollection& coll);

struct CentralStrip {
  // Region indices of the C-regions of degree >= 2.
  std::vector<int> components;
  int degree = 0;
  Rational eta;
  // Closed short arcs of all components; these are the components of the
  // strip's intersection with the circle.
  std::vector<Arc> short_arcs;
  // Leaf ids bounding the strip.
  std::vector<int> boundary_leaves;
};

std::optional<CentralStrip> central_strip(const SiblingPortrait& p);

// Vertex i is region i; edge i is leaf i; rotations follow the ccw boundary.
PlaneBicoloredTree dual_tree(const SiblingPortrait& p);

struct CriticalChordSet {
  int count = 0;
  std::vector<CriticalChord> witness;
};

// deg(r) - 1 together with that many pairwise disjoint critical chords
// inside r, drawn from the first arc to each later arc in ccw order.
CriticalChordSet max_disjoint_critical_chords(int d, const Region& r);

// Critical chord with both endpoints in the closed arcs of r.
bool critical_chord_in_region(int d, const Region& r, const Chord& ch);

}  // namespace lamkit
