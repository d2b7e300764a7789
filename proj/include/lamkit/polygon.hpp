#pragma once

// Periodic polygons under sigma_d: the identity-return predicate, the known
// examples, exhaustive search over points of period dividing p, and the
// side-length analysis for sigma_3 orbits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamkit/angle.hpp"
#include "lamkit/leaf.hpp"

namespace lamkit {

// Vertices in increasing order, so the list starts at the least angle.
struct Polygon {
  std::vector<Angle> vertices;

  std::size_t size() const { return vertices.size(); }
  std::string str() const;
  friend bool operator==(const Polygon&, const Polygon&) = default;
  friend auto operator<=>(const Polygon& a, const Polygon& b) { return a.vertices <=> b.vertices; }
};

// Sorts and validates (k >= 2, pairwise distinct). Throws std::invalid_argument.
Polygon make_polygon(std::vector<Angle> vertices);

enum class IRPReason { None, NotPeriodic, RotatedReturn, OrderReversed, OrbitOverlap };
std::string reason_name(IRPReason r);

struct IRPVerdict {
  bool is_identity_return = false;
  IRPReason reason = IRPReason::None;
  std::string detail;
  int iterate = -1;  // offending iterate, when there is one
};

// Closed convex hulls of two inscribed vertex sets are disjoint: no common
// vertex and every vertex of b in one open gap of a.
bool hulls_disjoint(const std::vector<Angle>& a, const std::vector<Angle>& b);
// Same predicate computed as: no common vertex and no two sides cross.
bool hulls_disjoint_by_sides(const std::vector<Angle>& a, const std::vector<Angle>& b);

// Images v -> sigma(v) listed in the order of `from` form a ccw cyclic order.
bool preserves_order(const std::vector<Angle>& from, const std::vector<Angle>& to);

// Checks run in this order: periodicity with least period p, early return
// as a rotated set, circular order at every step (skipped when
// check_order is false), pairwise disjoint hulls.
IRPVerdict is_identity_return(int d, const Polygon& P, int p, bool check_order = true);

struct PolygonOrbit {
  int d = 3;
  int period = 1;
  // images[t][i] = sigma^t(vertex i of P_0); vertex labels are kept.
  std::vector<std::vector<Angle>> images;
  std::vector<bool> order_preserved;        // step t -> t+1
  std::vector<std::vector<bool>> disjoint;  // hull disjointness of P_t and P_u
  IRPVerdict verdict;

  const std::vector<Angle>& base() const { return images.front(); }
  // Side j of P_t joins images[t][j] and images[t][j+1 mod k].
  Chord side(std::size_t t, std::size_t j) const;
  // Ccw arc from images[t][j] to images[t][j+1]: the outer arc of the side.
  Rational gap(std::size_t t, std::size_t j) const;
};

PolygonOrbit polygon_orbit(int d, const Polygon& P, int p);

// {00k} for k = 1..d-1 and {(d-1)(d-1)0}, period 3.
Polygon example_period3(int d);
// k/(d^2-1), k = 1..d-1, period 2.
Polygon example_period2(int d);
// {132, 032, 022, 200} in base 4, period 3.
Polygon example_sigma4_quadrilateral();
// The side joining 022 and 200.
Chord sigma4_special_side();
// {1/8, 1/4, 7/8}: period 2 under sigma_3 but order reversing.
Polygon impostor_triangle();

struct QuadrilateralCheck {
  IRPVerdict verdict;
  std::vector<Rational> side_distance;  // per iterate
  Rational min_distance;
  bool stays_far = false;  // min_distance >= 1/20
};

QuadrilateralCheck check_sigma4_quadrilateral();

struct SearchLimits {
  std::uint64_t max_points = 1ULL << 20;  // d^p - 1
  std::uint64_t node_budget = 4000000000ULL;
  unsigned threads = 0;  // 0: LAMKIT_THREADS or hardware concurrency
};

struct SearchResult {
  int d = 3;
  int k = 3;
  int p = 1;
  // One canonical polygon per orbit: the one holding the least vertex.
  std::vector<Polygon> orbits;
  bool complete = true;
  std::uint64_t nodes = 0;
  // Orbits found by the search that the exact predicate rejected. Always
  // zero unless the pruning is wrong.
  std::size_t rejected = 0;
};

// All identity-return k-gons of least period p. Throws std::invalid_argument
// when d^p - 1 exceeds limits.max_points.
SearchResult search_irp(int d, int k, int p, const SearchLimits& limits = {});

// True iff no period-2 identity-return k-gon exists. Throws
// std::runtime_error if the search did not complete.
bool verify_no_period2(int d, int k, const SearchLimits& limits = {});

// Sides within 1/12 of one critical chord sitting in a gap of the polygon.
struct NearChord {
  std::size_t gap = 0;  // side whose outer arc holds the chord
  Rational inner;       // 1/3 or 2/3
};

enum class ApproachCase { None, TwoChords, SameChord };
std::string case_name(ApproachCase c);

struct Approach {
  std::size_t t = 0;
  std::size_t a = 0;  // the two sides with length in (1/4, 5/12)
  std::size_t b = 0;
  ApproachCase kind = ApproachCase::None;
  bool longest = false;  // a and b are longer than every other side
  std::optional<std::size_t> other;  // longest remaining side
  bool successor_rule = false;
};

struct SideReport {
  std::size_t side = 0;
  std::vector<Rational> lengths;  // per iterate
  std::optional<std::size_t> near_critical;  // first t with length in (1/4, 5/12)
};

struct EqualPair {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> near_iterates;  // t with both lengths in (1/4, 5/12)
  bool unique = false;
  bool straddles = false;  // no single critical chord within 1/12 of both
};

struct Sigma3Analysis {
  int k = 3;
  int period = 1;
  bool no_fixed_lengths = true;
  bool close_to_critical = true;  // every side reaches (1/4, 5/12)
  std::vector<SideReport> sides;
  std::vector<EqualPair> equal_pairs;
  std::vector<Approach> approaches;  // every iterate with two sides near
  bool thinpoly = false;     // some approach has case 1 or 2 and the pair longest
  bool longest_rule = true;  // every such approach obeys the successor rule
  bool ok = false;
};

// Throws std::invalid_argument unless the orbit is an identity-return orbit
// under sigma_3.
Sigma3Analysis analyze_orbit_sigma3(const PolygonOrbit& orbit);

}  // namespace lamkit
