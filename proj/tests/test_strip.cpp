#include <doctest.h>

#include <numeric>

#include "lamkit/census.hpp"
#include "lamkit/strip.hpp"

using namespace lamkit;

namespace {

Chord ch(long a, long b, long q) { return Chord(Angle(a, q), Angle(b, q)); }

struct Tally {
  std::size_t collections = 0;
  std::size_t part1 = 0;
  std::size_t part2 = 0;
  std::size_t first_same = 0;
  std::size_t first_ok = 0;
};

// Exact reports for every admissible image up to denominator qmax and every
// matching with a strip, no shortcuts.
Tally exact_sweep(int d, long qmax) {
  Tally t;
  std::vector<std::vector<int>> shapes;
  for (const auto& m : noncrossing_matchings(d)) {
    if (central_strip(build_portrait(make_collection(d, default_image(d), m)))) shapes.push_back(m);
  }
  for (long q = 2; q <= qmax; ++q) {
    for (long a = 0; a < q; ++a) {
      for (long s = 1; (d + 1) * s < q; ++s) {
        if (std::gcd(std::gcd(a, (a + s) % q), q) != 1) continue;
        Chord img(Angle(a, q), Angle(a + s, q));
        for (const auto& m : shapes) {
          auto r = verify_csl(make_collection(d, img, m));
          if (r.verdict == Verdict::INAPPLICABLE) continue;
          ++t.collections;
          for (const auto& l : r.leaves) {
            t.part1 += l.part1 ? 0 : 1;
            t.part2 += l.part2 ? 0 : 1;
            for (const auto& w : l.witnesses) {
              if (!w.first) continue;
              ++t.first_same;
              t.first_ok += (w.valid && w.outside_strip) ? 1 : 0;
            }
          }
        }
      }
    }
  }
  return t;
}

}  // namespace

TEST_SUITE("strip") {
  TEST_CASE("leaf growth") {
    CHECK(leaf_growth(2, Rational(1, 5)) == 1);
    CHECK(leaf_growth(3, Rational(1, 10)) == 1);
    CHECK(leaf_growth(2, Rational(1, 100)) == 6);
    CHECK_THROWS_AS(leaf_growth(2, Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(leaf_growth(2, Rational(0)), std::domain_error);
    for (int d = 2; d <= 5; ++d) {
      for (int q = 2; q <= 300; ++q) {
        for (int p = 1; (d + 1) * p < q; ++p) {
          Rational x(p, q);
          std::size_t n = leaf_growth(d, x);
          Rational cur = x;
          for (std::size_t i = 0; i < n; ++i) {
            Rational next = tau(d, cur);
            REQUIRE(next > cur);
            cur = next;
          }
          REQUIRE(cur >= Rational(1, d + 1));
        }
      }
    }
  }

  TEST_CASE("orbit traces") {
    auto o = orbit_trace(3, ch(1, 24, 26));
    REQUIRE(o.cycled);
    CHECK(o.cycle_start == 0);
    CHECK(o.lengths == std::vector<Rational>{Rational(3, 26), Rational(9, 26), Rational(1, 26)});
    for (std::size_t i = 0; i + 1 < o.chords.size(); ++i) CHECK(o.chords[i + 1] == image(3, o.chords[i]));
    for (std::size_t i = 0; i < o.chords.size(); ++i) {
      CHECK(o.critical_distance[i] == distance_to_nearest_critical(3, o.chords[i]));
    }
    auto pre = orbit_trace(2, ch(1, 3, 12));
    CHECK(pre.cycled);
    CHECK(pre.cycle_start > 0);
  }

  TEST_CASE("closest critical sweep") {
    auto a = closest_critical_sweep(Rational(3, 26));
    CHECK(a.verdict == Verdict::PASS);
    CHECK(a.index == 1);
    CHECK(a.value == Rational(9, 26));
    CHECK(closest_critical_sweep(Rational(1, 4)).verdict == Verdict::EXCLUDED);
    auto b = closest_critical_sweep(Rational(5, 11));
    CHECK(b.verdict == Verdict::PASS);
    CHECK(b.index == 1);
    CHECK(b.value == Rational(4, 11));
    // Lengths that never land on a fixed length all get close.
    for (int q = 2; q <= 120; ++q) {
      for (int p = 1; 2 * p <= q; ++p) {
        auto s = closest_critical_sweep(Rational(p, q));
        CHECK(s.verdict != Verdict::FAIL);
        CHECK(s.verdict != Verdict::TRUNCATED);
      }
    }
  }

  TEST_CASE("entering a region") {
    auto p = build_portrait(make_collection(2, ch(7, 13, 20), {1, 0}));
    auto strip = central_strip(p);
    REQUIRE(strip);
    const Region& c = p.regions[static_cast<std::size_t>(strip->components.front())];
    // A boundary leaf of the strip lies in its closure.
    CHECK(enters_region(p.collection.leaves[0], c));
    // A chord inside one R region only touches nothing.
    const auto& arc = c.arcs.front();
    CHECK(enters_region(Chord(arc.start, arc.end), c));
    Angle mid((arc.start.value() + arc.end.value()) / 2);
    CHECK(enters_region(Chord(mid, Angle(mid.value() + Rational(1, 2))), c));
  }

  TEST_CASE("verify_csl on named collections") {
    auto r = verify_csl(make_collection(2, ch(7, 13, 20), {1, 0}));
    CHECK(r.verdict == Verdict::PASS);
    CHECK(r.eta_bound);
    CHECK(r.image_length);
    for (const auto& l : r.leaves) {
      CHECK(l.part1);
      CHECK(l.part2);
    }
    CHECK(verify_unicritical(make_collection(2, ch(7, 13, 20), {1, 0})).verdict == Verdict::PASS);

    // Long arc exactly 1/3: the special case.
    CHECK(verify_csl(make_collection(2, ch(1, 2, 3), {1, 0})).verdict == Verdict::INAPPLICABLE);
    // No strip at all.
    CHECK(verify_csl(make_collection(3, default_image(3), {0, 1, 2})).verdict == Verdict::INAPPLICABLE);

    auto u = verify_unicritical(make_collection(3, ch(2, 3, 13), {2, 0, 1}));
    CHECK(u.verdict == Verdict::PASS);
    CHECK(u.same_component_reentries == 0);
    std::size_t reentries = 0;
    for (const auto& l : u.csl.leaves) reentries += l.reentries.size();
    CHECK(reentries > 0);

    // Strip of degree 2 < 3.
    CHECK(verify_unicritical(make_collection(3, ch(2, 3, 13), {1, 0, 2})).verdict == Verdict::INAPPLICABLE);
    // The period-3 leaf's orbit crosses its own siblings.
    CHECK(verify_csl(make_collection(3, ch(1, 24, 26), {2, 0, 1})).verdict == Verdict::INAPPLICABLE);
  }

  TEST_CASE("witness arithmetic") {
    for (int d = 2; d <= 4; ++d) {
      for (long q = 2; q <= 40; ++q) {
        for (long a = 0; a < q; a += 3) {
          for (long s = 1; (d + 1) * s < q; s += 2) {
            Chord img(Angle(a, q), Angle(a + s, q));
            for (const auto& coll : enumerate_sibling_collections(d, img)) {
              auto r = verify_csl(coll);
              if (r.verdict == Verdict::INAPPLICABLE) continue;
              CHECK(r.eta_bound);
              CHECK(r.image_length);
              for (const auto& l : r.leaves) {
                for (const auto& w : l.witnesses) {
                  CHECK(w.k < w.j);
                  CHECK(is_critical(d, w.D.chord));
                  if (w.valid) CHECK(w.achieved <= w.bound);
                  Rational bound = r.eta;
                  for (std::size_t i = 0; i < w.j - w.k; ++i) bound /= d;
                  CHECK(w.bound == bound);
                }
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("fast sweep agrees with exact reports") {
    for (int d = 2; d <= 3; ++d) {
      const long qmax = d == 2 ? 30 : 22;
      SweepConfig cfg;
      cfg.d = d;
      cfg.denominator_max = static_cast<int>(qmax);
      cfg.exhaustive_max = static_cast<int>(qmax);
      cfg.threads = 1;
      auto fast = csl_sweep(cfg);
      auto slow = exact_sweep(d, qmax);
      CHECK(fast.complete);
      CHECK(fast.collections == slow.collections);
      CHECK(fast.part1_violations == slow.part1);
      CHECK(fast.part2_violations == slow.part2);
      CHECK(fast.first_same_component == slow.first_same);
      CHECK(fast.first_witnessed == slow.first_ok);
      CHECK(slow.part1 == 0);
      CHECK(slow.part2 == 0);
      CHECK(slow.first_ok == slow.first_same);
    }
  }

  TEST_CASE("sampling is reproducible") {
    SweepConfig cfg;
    cfg.d = 2;
    cfg.denominator_max = 200;
    cfg.exhaustive_max = 20;
    cfg.samples = 300;
    cfg.seed = 99;
    auto a = csl_sweep(cfg);
    cfg.threads = 1;
    auto b = csl_sweep(cfg);
    CHECK_FALSE(a.complete);
    CHECK(a.images == b.images);
    CHECK(a.collections == b.collections);
    CHECK(a.touch_only == b.touch_only);
    CHECK(a.first_same_component == b.first_same_component);
  }
}
