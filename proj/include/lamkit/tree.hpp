#pragma once

// Plane bicolored trees: construction, validation, rotation-invariant
// canonical codes, enumeration up to rotation and the closed-form count.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lamkit/angle.hpp"

namespace lamkit {

enum class RegionKind { C, R };

inline RegionKind opposite(RegionKind k) { return k == RegionKind::C ? RegionKind::R : RegionKind::C; }
inline char kind_char(RegionKind k) { return k == RegionKind::C ? 'C' : 'R'; }

// One traversal of an edge, from vertex `from` to vertex `to`.
struct ContourStep {
  int from = 0;
  int to = 0;
  int edge = 0;
};

class PlaneBicoloredTree {
 public:
  PlaneBicoloredTree() = default;
  // rotation[v] lists the edges at v in cyclic order. The contour walk leaves
  // a vertex along the successor (in that cyclic order) of the edge it arrived
  // on. Throws std::invalid_argument unless the data is a bicolored tree with
  // consistent rotations.
  PlaneBicoloredTree(std::vector<RegionKind> colors, std::vector<std::array<int, 2>> edges,
                     std::vector<std::vector<int>> rotation);

  std::size_t vertex_count() const { return colors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  RegionKind color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<RegionKind>& colors() const { return colors_; }
  const std::array<int, 2>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<int>& rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  // Full boundary walk (2 * edge_count steps) starting by leaving `from`
  // along `edge`.
  std::vector<ContourStep> contour(int from, int edge) const;

  // Parent array from a BFS rooted at vertex 0 (root has parent -1).
  std::vector<int> parents() const;

 private:
  std::vector<RegionKind> colors_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<int>> rotation_;
};

// Lexicographically least boundary word over all starting edge-sides. Each
// step contributes (color of the departure vertex, offset to the step that
// traverses the same edge back). Equal codes iff the trees differ by a
// rotation of the plane embedding.
struct CanonicalCode {
  std::vector<int> word;

  std::string str() const;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const PlaneBicoloredTree& t);

// Rooted plane tree from a Dyck word ('(' = step away from the root), with
// the root colored `root_color`.
PlaneBicoloredTree tree_from_dyck(const std::string& dyck, RegionKind root_color);

std::vector<std::string> dyck_words(int edges);

BigInt binomial(int n, int k);
BigInt catalan(int n);
long euler_phi(long n);

// Inner sum of the rotation-class count, before the division by d.
BigInt count_formula_numerator(int d);
// Number of plane bicolored trees with d edges up to rotation.
BigInt count_formula(int d);

// All rotation classes of plane bicolored trees with d edges, sorted.
std::vector<CanonicalCode> enumerate_trees(int d);

}  // namespace lamkit
