#pragma once

// Exact arithmetic on the circle R/Z.
//
// Every point is a reduced rational num/den with 0 <= num < den. The
// multiplication map t -> d*t (mod 1) and the d-nary itinerary of a point are
// computed without rounding; periodic points of period p have denominators
// dividing d^p - 1, which quickly leaves the range of a machine word, so the
// representation is arbitrary precision throughout.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const BigInt& num, const BigInt& den);

// "n/d", or "n" when the denominator is 1.
std::string format_rational(const Rational& r);

// Accepts "n", "n/d" and "-n/d". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

class Angle {
 public:
  Angle() = default;
  // Reduces num/den into [0, 1). Throws std::invalid_argument if den == 0.
  Angle(const BigInt& num, const BigInt& den);
  explicit Angle(const Rational& value);

  BigInt num() const;
  BigInt den() const;
  const Rational& value() const { return value_; }

  // Always "num/den", with zero written "0/1".
  std::string str() const;

  friend bool operator==(const Angle&, const Angle&) = default;
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

// Same as the Angle constructor; kept for symmetry with the rest of the API.
Angle angle(const BigInt& num, const BigInt& den);
Angle parse_angle(std::string_view text);

// t -> d*t (mod 1).
Angle sigma(int d, const Angle& a);
Angle sigma_pow(int d, const Angle& a, std::size_t n);

// Digit n is k iff sigma^n(a) lies in [k/d, (k+1)/d).
std::vector<int> itinerary(int d, const Angle& a, std::size_t length);

// The point whose itinerary is the given digit block repeated forever:
// N / (d^p - 1) with N the digits read in base d.
Angle periodic_point(int d, std::span<const int> digits);

// Length of the counterclockwise arc from start to end, in [0, 1).
Rational arc_length(const Angle& start, const Angle& end);
// Membership in the open ccw arc (start, end). Empty when start == end.
bool in_arc(const Angle& a, const Angle& start, const Angle& end);
// Membership in the closed ccw arc [start, end]; {start} when start == end.
bool in_closed_arc(const Angle& a, const Angle& start, const Angle& end);

struct Itinerary {
  int base = 2;
  std::vector<int> preperiod;
  std::vector<int> period;

  // "pre(period)"; digits are comma separated when base > 10.
  std::string str() const;
  friend bool operator==(const Itinerary&, const Itinerary&) = default;
};

// Throws std::invalid_argument for an empty period or an out-of-range digit.
void validate(const Itinerary& it);

// Shortest equivalent form: primitive period, preperiod absorbed into the
// period where the tails agree. Never applied implicitly.
Itinerary canonicalize(const Itinerary& it);

// Eventually periodic itinerary of a rational point, found by detecting the
// first repeated iterate. The result is already canonical.
Itinerary eventual_itinerary(int d, const Angle& a);

// Point with the given eventually periodic itinerary.
Angle point_from_itinerary(const Itinerary& it);

}  // namespace lamkit
