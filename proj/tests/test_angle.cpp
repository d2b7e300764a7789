#include <doctest.h>

#include <random>

#include "lamkit/angle.hpp"

using namespace lamkit;

namespace {

// Digit by digit: floor(d * x) of the current fractional part.
std::vector<int> slow_digits(int d, Rational x, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational y = x * d;
    BigInt f = numerator(y) / denominator(y);
    out.push_back(static_cast<int>(f));
    x = y - Rational(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("angle") {
  TEST_CASE("construction reduces mod 1") {
    CHECK(Angle(3, 2).str() == "1/2");
    CHECK(Angle(26, 26).str() == "0/1");
    CHECK(Angle(-1, 4).str() == "3/4");
    CHECK(Angle(6, 8) == Angle(3, 4));
    CHECK_THROWS_AS(Angle(1, 0), std::invalid_argument);
  }

  TEST_CASE("sigma") {
    CHECK(sigma(3, Angle(1, 3)) == Angle(0, 1));
    CHECK(sigma(2, Angle(0, 1)) == Angle(0, 1));
    CHECK(sigma(3, Angle(1, 26)) == Angle(3, 26));
    CHECK(sigma_pow(3, Angle(1, 26), 3) == Angle(1, 26));
  }

  TEST_CASE("itineraries") {
    CHECK(itinerary(2, Angle(1, 3), 4) == std::vector<int>{0, 1, 0, 1});
    CHECK(itinerary(3, Angle(1, 3), 3) == std::vector<int>{1, 0, 0});
    CHECK(itinerary(3, Angle(0, 1), 3) == std::vector<int>{0, 0, 0});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      int d = 2 + static_cast<int>(rng() % 6);
      long q = 1 + static_cast<long>(rng() % 500);
      long p = static_cast<long>(rng() % static_cast<unsigned long>(q));
      Angle a(p, q);
      CHECK(itinerary(d, a, 12) == slow_digits(d, a.value(), 12));
    }
  }

  TEST_CASE("periodic points solve the fixed point equation") {
    std::vector<int> w1{0, 0, 1};
    std::vector<int> w2{0, 1};
    std::vector<int> w3{0};
    CHECK(periodic_point(3, w1) == Angle(1, 26));
    CHECK(periodic_point(4, w2) == Angle(1, 15));
    CHECK(periodic_point(3, w3) == Angle(0, 1));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      int d = 2 + static_cast<int>(rng() % 5);
      std::size_t p = 1 + rng() % 6;
      std::vector<int> w(p);
      for (auto& t : w) t = static_cast<int>(rng() % static_cast<unsigned>(d));
      if (std::all_of(w.begin(), w.end(), [&](int t) { return t == d - 1; })) continue;
      Angle x = periodic_point(d, w);
      // d^p x = x + N (mod nothing): x (d^p - 1) is the base-d value of w.
      BigInt N = 0;
      BigInt dp = 1;
      for (int t : w) N = N * d + t;
      for (std::size_t i = 0; i < p; ++i) dp *= d;
      CHECK(x.value() * Rational(dp - 1) == Rational(N));
      std::vector<int> rep;
      for (int k = 0; k < 3; ++k) rep.insert(rep.end(), w.begin(), w.end());
      CHECK(itinerary(d, x, 3 * p) == rep);
      // Shift property.
      std::vector<int> shifted(w.begin() + 1, w.end());
      shifted.push_back(w.front());
      CHECK(sigma(d, x) == periodic_point(d, shifted));
    }
  }

  TEST_CASE("arcs") {
    CHECK(arc_length(Angle(1, 4), Angle(3, 4)) == Rational(1, 2));
    CHECK(arc_length(Angle(3, 4), Angle(1, 4)) == Rational(1, 2));
    CHECK(in_arc(Angle(0, 1), Angle(3, 4), Angle(1, 4)));
    CHECK_FALSE(in_arc(Angle(1, 2), Angle(3, 4), Angle(1, 4)));
    CHECK_FALSE(in_arc(Angle(3, 4), Angle(3, 4), Angle(1, 4)));
    CHECK(in_closed_arc(Angle(3, 4), Angle(3, 4), Angle(1, 4)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      Angle a(static_cast<long>(rng() % 97), 97);
      Angle b(static_cast<long>(rng() % 89), 89);
      if (a == b) continue;
      CHECK(arc_length(a, b) + arc_length(b, a) == 1);
    }
  }

  TEST_CASE("itinerary strings and round trips") {
    Itinerary it = eventual_itinerary(3, Angle(1, 3));
    CHECK(it.str() == "1(0)");
    CHECK(point_from_itinerary(it) == Angle(1, 3));
    CHECK(eventual_itinerary(2, Angle(1, 3)).str() == "(01)");
    Itinerary loose{3, {}, {0, 1, 0, 1}};
    CHECK(canonicalize(loose).period == std::vector<int>{0, 1});
    CHECK_THROWS_AS(validate(Itinerary{3, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Itinerary{3, {}, {3}}), std::invalid_argument);
    for (long q = 1; q < 60; ++q) {
      for (long p = 0; p < q; ++p) {
        Angle a(p, q);
        CHECK(point_from_itinerary(eventual_itinerary(5, a)) == a);
      }
    }
  }

  TEST_CASE("large denominators stay exact") {
    std::vector<int> w(12, 0);
    w.back() = 1;
    Angle x = periodic_point(3, w);
    CHECK(x.den() == BigInt(531440));
    CHECK(sigma_pow(3, x, 12) == x);
    std::vector<int> w40(40, 1);
    w40[0] = 0;
    Angle y = periodic_point(7, w40);
    CHECK(sigma_pow(7, y, 40) == y);
  }
}
