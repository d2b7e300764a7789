#pragma once

// Chords of the closed unit disk with endpoints on the circle.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamkit/angle.hpp"

namespace lamkit {

// Unordered pair of circle points, stored with a() <= b().
class Chord {
 public:
  Chord() = default;
  Chord(const Angle& p, const Angle& q);

  const Angle& a() const { return a_; }
  const Angle& b() const { return b_; }
  bool degenerate() const { return a_ == b_; }
  bool has_endpoint(const Angle& p) const { return p == a_ || p == b_; }

  // "a–b" using the Angle string form.
  std::string str() const;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend std::strong_ordering operator<=>(const Chord& x, const Chord& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  Angle a_;
  Angle b_;
};

// Accepts "a-b" or "a–b" with fractional endpoints.
Chord parse_chord(std::string_view text);

Chord image(int d, const Chord& ch);

// Shorter of the two subtended arcs; 0 for a degenerate chord.
Rational leaf_length(const Chord& ch);

// Length of sigma_d(l) as a function of |l| on [0, 1/2].
// Throws std::domain_error outside that interval.
Rational tau(int d, const Rational& x);

// Fixed points of tau in [0, 1/2], ascending.
std::vector<Rational> tau_fixed_points(int d);

// Linked endpoints. Degenerate chords and shared endpoints never cross.
bool crosses(const Chord& c1, const Chord& c2);

// Closed chords have no common point.
bool disjoint(const Chord& c1, const Chord& c2);

// Endpoint metric between non-crossing non-degenerate chords: with circular
// order x1 <= x2 < y2 <= y1 this is |(x1,x2)| + |(y2,y1)|.
// Throws std::invalid_argument for crossing or degenerate input.
Rational endpoint_distance(const Chord& c1, const Chord& c2);

bool is_critical(int d, const Chord& ch);

struct CriticalChord {
  Chord chord;
  // b - a = displacement / d for the stored orientation a < b.
  int displacement = 0;
};

std::optional<CriticalChord> as_critical(int d, const Chord& ch);

// min over critical chords D not crossing ch of d_E(ch, D). Zero for a
// critical chord. The closed form is min over k in 1..d-1 of |s - k/d| with s
// the ccw arc length from a() to b().
Rational distance_to_nearest_critical(int d, const Chord& ch);

}  // namespace lamkit
