#include <doctest.h>

#include <random>
#include <set>

#include "lamkit/polygon.hpp"

using namespace lamkit;

namespace {

Polygon poly(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Angle> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return make_polygon(out);
}

// Brute force: every k-subset of the points of period dividing p, checked
// with the exact predicate, grouped into orbits by their least member.
std::set<Polygon> brute_orbits(int d, int k, int p) {
  long M = 1;
  for (int i = 0; i < p; ++i) M *= d;
  M -= 1;
  std::set<Polygon> out;
  std::vector<long> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, std::size_t pos, long from) -> void {
    if (pos == idx.size()) {
      std::vector<Angle> v;
      for (long n : idx) v.emplace_back(n, M);
      Polygon P = make_polygon(v);
      if (!is_identity_return(d, P, p).is_identity_return) return;
      // Canonical member: the iterate holding the least vertex.
      Polygon best = P;
      std::vector<Angle> cur = P.vertices;
      for (int t = 1; t < p; ++t) {
        for (auto& a : cur) a = sigma(d, a);
        Polygon Q = make_polygon(cur);
        if (Q.vertices.front() < best.vertices.front()) best = Q;
      }
      out.insert(best);
      return;
    }
    for (long n = from; n < M; ++n) {
      idx[pos] = n;
      self(self, pos + 1, n + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_SUITE("polygon") {
  TEST_CASE("examples") {
    CHECK(example_period3(3) == poly({{1, 26}, {2, 26}, {24, 26}}));
    CHECK(example_period3(4) == poly({{1, 63}, {2, 63}, {3, 63}, {60, 63}}));
    CHECK(example_period2(4) == poly({{1, 15}, {2, 15}, {3, 15}}));
    CHECK(example_sigma4_quadrilateral() == poly({{30, 63}, {14, 63}, {10, 63}, {32, 63}}));
    CHECK(sigma4_special_side() == Chord(Angle(10, 63), Angle(32, 63)));
    for (int d = 3; d <= 5; ++d) CHECK(is_identity_return(d, example_period3(d), 3).is_identity_return);
    for (int d = 4; d <= 6; ++d) CHECK(is_identity_return(d, example_period2(d), 2).is_identity_return);
  }

  TEST_CASE("failure reasons") {
    auto imp = is_identity_return(3, impostor_triangle(), 2);
    CHECK_FALSE(imp.is_identity_return);
    CHECK(imp.reason == IRPReason::OrderReversed);
    // Without the order check the impostor passes.
    CHECK(is_identity_return(3, impostor_triangle(), 2, false).is_identity_return);

    CHECK(is_identity_return(3, poly({{1, 26}, {2, 26}, {24, 26}}), 6).reason == IRPReason::NotPeriodic);
    CHECK(is_identity_return(3, poly({{1, 26}, {2, 26}, {24, 26}}), 2).reason == IRPReason::NotPeriodic);
    // Vertices collide: 0 and 1/3 both go to 0.
    auto col = is_identity_return(3, poly({{0, 1}, {1, 3}}), 1);
    CHECK(col.reason == IRPReason::NotPeriodic);
    CHECK(col.iterate == 1);
    // A period-3 cycle as one triangle: returns rotated.
    CHECK(is_identity_return(3, poly({{1, 26}, {3, 26}, {9, 26}}), 3).reason == IRPReason::RotatedReturn);
    // Leaf whose images meet.
    CHECK(is_identity_return(2, poly({{1, 7}, {2, 7}}), 3).reason == IRPReason::OrbitOverlap);
    CHECK_THROWS_AS(make_polygon({Angle(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(make_polygon({Angle(1, 3), Angle(2, 6)}), std::invalid_argument);
  }

  TEST_CASE("hull disjointness: two implementations") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 3000; ++trial) {
      std::set<Angle> sa;
      std::set<Angle> sb;
      std::size_t ka = 1 + rng() % 4;
      std::size_t kb = 1 + rng() % 4;
      while (sa.size() < ka) sa.insert(Angle(static_cast<long>(rng() % 24), 24));
      while (sb.size() < kb) sb.insert(Angle(static_cast<long>(rng() % 24), 24));
      std::vector<Angle> a(sa.begin(), sa.end());
      std::vector<Angle> b(sb.begin(), sb.end());
      bool x = hulls_disjoint(a, b);
      CHECK(x == hulls_disjoint(b, a));
      if (a.size() >= 2 && b.size() >= 2) CHECK(x == hulls_disjoint_by_sides(a, b));
    }
  }

  TEST_CASE("order preservation") {
    std::vector<Angle> from{Angle(1, 8), Angle(1, 4), Angle(7, 8)};
    std::vector<Angle> to;
    for (const auto& a : from) to.push_back(sigma(3, a));
    CHECK_FALSE(preserves_order(from, to));
    std::vector<Angle> tri{Angle(1, 26), Angle(2, 26), Angle(24, 26)};
    std::vector<Angle> img;
    for (const auto& a : tri) img.push_back(sigma(3, a));
    CHECK(preserves_order(tri, img));
  }

  TEST_CASE("search agrees with brute force") {
    auto r = search_irp(3, 3, 3);
    CHECK(r.complete);
    CHECK(r.rejected == 0);
    CHECK(std::find(r.orbits.begin(), r.orbits.end(), example_period3(3)) != r.orbits.end());
    auto brute = brute_orbits(3, 3, 3);
    CHECK(std::set<Polygon>(r.orbits.begin(), r.orbits.end()) == brute);
    CHECK(brute.size() == 12);

    for (auto [d, k, p] : {std::tuple{3, 2, 3}, {2, 2, 3}, {2, 3, 4}, {4, 3, 2}, {3, 4, 3}, {2, 2, 4}}) {
      auto s = search_irp(d, k, p);
      auto b = brute_orbits(d, k, p);
      CHECK(std::set<Polygon>(s.orbits.begin(), s.orbits.end()) == b);
    }
  }

  TEST_CASE("search results") {
    auto p2 = search_irp(4, 3, 2);
    CHECK(std::find(p2.orbits.begin(), p2.orbits.end(), example_period2(4)) != p2.orbits.end());
    for (int p = 1; p <= 5; ++p) CHECK(search_irp(3, 4, p).orbits.empty());
    for (int d = 3; d <= 6; ++d) CHECK(verify_no_period2(d, d));
    CHECK_FALSE(verify_no_period2(4, 3));
    // Orbits are listed once, by their least member.
    auto four = search_irp(3, 3, 4);
    CHECK(four.complete);
    for (const auto& P : four.orbits) {
      auto o = polygon_orbit(3, P, 4);
      CHECK(o.verdict.is_identity_return);
      for (const auto& img : o.images) CHECK(*std::min_element(img.begin(), img.end()) >= P.vertices.front());
    }
  }

  TEST_CASE("budget gives an incomplete result") {
    SearchLimits lim;
    lim.node_budget = 10;
    auto r = search_irp(3, 3, 4, lim);
    CHECK_FALSE(r.complete);
    CHECK_THROWS_AS(verify_no_period2(8, 8, lim), std::runtime_error);
    SearchLimits tiny;
    tiny.max_points = 100;
    CHECK_THROWS_AS(search_irp(3, 3, 6, tiny), std::invalid_argument);
  }

  TEST_CASE("sigma_4 quadrilateral") {
    auto q = check_sigma4_quadrilateral();
    CHECK(q.verdict.is_identity_return);
    CHECK(q.side_distance.size() == 3);
    CHECK(q.min_distance >= Rational(1, 20));
    CHECK(q.stays_far);
  }

  TEST_CASE("sigma_3 triangle analysis") {
    auto o = polygon_orbit(3, example_period3(3), 3);
    auto a = analyze_orbit_sigma3(o);
    CHECK(a.ok);
    CHECK(a.no_fixed_lengths);
    CHECK(a.close_to_critical);
    REQUIRE(a.approaches.size() == 1);
    CHECK(a.approaches[0].t == 2);
    CHECK(a.approaches[0].kind == ApproachCase::SameChord);
    CHECK(a.approaches[0].longest);
    CHECK(a.approaches[0].successor_rule);

    // Both cases occur among the period-4 triangles.
    std::set<ApproachCase> kinds;
    for (const auto& P : search_irp(3, 3, 4).orbits) {
      auto r = analyze_orbit_sigma3(polygon_orbit(3, P, 4));
      CHECK(r.ok);
      for (const auto& ap : r.approaches) kinds.insert(ap.kind);
    }
    CHECK(kinds.count(ApproachCase::TwoChords) == 1);
    CHECK(kinds.count(ApproachCase::SameChord) == 1);

    CHECK_THROWS_AS(analyze_orbit_sigma3(polygon_orbit(4, example_period2(4), 2)), std::invalid_argument);
    CHECK_THROWS_AS(analyze_orbit_sigma3(polygon_orbit(3, impostor_triangle(), 2)), std::invalid_argument);
  }
}
