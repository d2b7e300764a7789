#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "lamkit/census.hpp"

using namespace lamkit;

namespace {

// Fixed matchings under x_i -> x_{i+r}, y_j -> y_{j+r}, summed over r and
// divided by d.
long orbit_count(int d) {
  long fixed = 0;
  for (const auto& m : noncrossing_matchings(d)) {
    for (int r = 0; r < d; ++r) {
      bool same = true;
      for (int i = 0; i < d; ++i) {
        int src = ((i - r) % d + d) % d;
        if ((m[static_cast<std::size_t>(src)] + r) % d != m[static_cast<std::size_t>(i)]) same = false;
      }
      fixed += same ? 1 : 0;
    }
  }
  return fixed / d;
}

// Same plane tree with vertices and edges renamed and every rotation list
// started at a random position.
PlaneBicoloredTree scramble(const PlaneBicoloredTree& t, std::mt19937_64& rng) {
  const int n = static_cast<int>(t.vertex_count());
  const int m = static_cast<int>(t.edge_count());
  std::vector<int> vp(static_cast<std::size_t>(n));
  std::vector<int> ep(static_cast<std::size_t>(m));
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ep.begin(), ep.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ep.begin(), ep.end(), rng);
  std::vector<RegionKind> colors(static_cast<std::size_t>(n));
  std::vector<std::array<int, 2>> edges(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(vp[static_cast<std::size_t>(v)])] = t.color(v);
  for (int e = 0; e < m; ++e) {
    const auto& ed = t.edge(e);
    edges[static_cast<std::size_t>(ep[static_cast<std::size_t>(e)])] = {vp[static_cast<std::size_t>(ed[0])], vp[static_cast<std::size_t>(ed[1])]};
  }
  for (int v = 0; v < n; ++v) {
    auto r = t.rotation(v);
    std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
    for (auto& e : r) e = ep[static_cast<std::size_t>(e)];
    rot[static_cast<std::size_t>(vp[static_cast<std::size_t>(v)])] = r;
  }
  return PlaneBicoloredTree(colors, edges, rot);
}

}  // namespace

TEST_SUITE("tree") {
  TEST_CASE("closed form") {
    CHECK(count_formula(2) == 2);
    CHECK(count_formula(3) == 3);
    CHECK(count_formula(4) == 6);
    CHECK(count_formula(5) == 10);
    CHECK(count_formula(6) == 28);
    CHECK(count_formula(7) == 63);
    for (int d = 1; d <= 12; ++d) CHECK(count_formula_numerator(d) % d == 0);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
    CHECK(catalan(7) == 429);
  }

  TEST_CASE("tree classes") {
    CHECK(enumerate_trees(1).size() == 1);
    for (int d = 2; d <= 7; ++d) {
      CHECK(BigInt(enumerate_trees(d).size()) == count_formula(d));
      CHECK(orbit_count(d) == static_cast<long>(count_formula(d)));
      CHECK(burnside_matching_count(d) == orbit_count(d));
      CHECK(matching_classes(d).size() == static_cast<std::size_t>(orbit_count(d)));
    }
    CHECK(dyck_words(3).size() == 5);
  }

  TEST_CASE("canonical codes ignore labels and starting points") {
    std::mt19937_64 rng(2);
    for (int d = 1; d <= 6; ++d) {
      for (const auto& w : dyck_words(d)) {
        for (auto root : {RegionKind::C, RegionKind::R}) {
          auto t = tree_from_dyck(w, root);
          auto code = canonical_code(t);
          for (int k = 0; k < 3; ++k) CHECK(canonical_code(scramble(t, rng)) == code);
        }
      }
    }
  }

  TEST_CASE("invalid trees are rejected") {
    using K = RegionKind;
    CHECK_THROWS_AS(PlaneBicoloredTree({K::C, K::C}, {{0, 1}}, {{0}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(PlaneBicoloredTree({K::C, K::R, K::C}, {{0, 1}, {1, 0}}, {{0, 1}, {0, 1}, {}}), std::invalid_argument);
  }

  TEST_CASE("rotation of matchings") {
    CHECK(rotate_matching({1, 0}, 1) == std::vector<int>{1, 0});
    CHECK(rotate_matching({0, 2, 1}, 1) == std::vector<int>{2, 1, 0});
    CHECK(canonical_matching({2, 1, 0}) == std::vector<int>{0, 2, 1});
  }

  TEST_CASE("trees and portraits correspond") {
    for (int d = 2; d <= 6; ++d) {
      const Chord img = default_image(d);
      std::set<CanonicalCode> seen;
      for (const auto& w : dyck_words(d)) {
        for (auto root : {RegionKind::C, RegionKind::R}) {
          auto t = tree_from_dyck(w, root);
          auto code = canonical_code(t);
          if (!seen.insert(code).second) continue;
          auto p = tree_to_portrait(t, img);
          CHECK(canonical_code(dual_tree(p)) == code);
          // Back through the matching: the same rotation class.
          auto q = tree_to_portrait(dual_tree(p), img);
          CHECK(canonical_matching(q.collection.match) == canonical_matching(p.collection.match));
        }
      }
    }
  }

  TEST_CASE("census") {
    auto r2 = census_crosscheck(2);
    CHECK(r2.total == 2);
    CHECK(r2.classes == 2);
    CHECK(r2.with_strip == 1);
    auto r3 = census_crosscheck(3);
    CHECK(r3.total == 5);
    CHECK(r3.classes == 3);
    CHECK(r3.with_strip == 2);
    auto r4 = census_crosscheck(4);
    CHECK(r4.classes == 6);
    CHECK(r4.with_strip == 5);
    for (int d = 2; d <= 6; ++d) CHECK(census_crosscheck(d).ok);
    // Another image leaf gives the same counts.
    CHECK(census_crosscheck(4, Chord(Angle(1, 7), Angle(2, 7))).ok);
  }

  TEST_CASE("named trees") {
    // R-C-R path: the long-leaf portrait for d = 2.
    auto path = tree_from_dyck("()()", RegionKind::C);
    auto p = tree_to_portrait(path, default_image(2));
    CHECK(p.collection.match == std::vector<int>{1, 0});
    // Star with a C centre: the symmetric portrait for d = 3.
    auto star = tree_from_dyck("()()()", RegionKind::C);
    auto s = tree_to_portrait(star, default_image(3));
    auto strip = central_strip(s);
    REQUIRE(strip);
    CHECK(strip->degree == 3);
  }
}
