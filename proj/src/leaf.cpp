#include "lamkit/leaf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lamkit {

Chord::Chord(const Angle& p, const Angle& q) : a_(std::min(p, q)), b_(std::max(p, q)) {}

std::string Chord::str() const { return a_.str() + "–" + b_.str(); }

Chord parse_chord(std::string_view text) {
  const std::string_view en_dash = "–";
  std::size_t pos = text.find(en_dash);
  std::size_t width = en_dash.size();
  if (pos == std::string_view::npos) {
    pos = text.find('-', 1);
    width = 1;
  }
  if (pos == std::string_view::npos) throw std::invalid_argument("chord must be written a-b: " + std::string(text));
  return Chord(parse_angle(text.substr(0, pos)), parse_angle(text.substr(pos + width)));
}

Chord image(int d, const Chord& ch) { return Chord(sigma(d, ch.a()), sigma(d, ch.b())); }

Rational leaf_length(const Chord& ch) {
  Rational s = ch.b().value() - ch.a().value();
  return std::min(s, Rational(1) - s);
}

Rational tau(int d, const Rational& x) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (x < 0 || x > Rational(1, 2)) throw std::domain_error("tau is defined on [0, 1/2]");
  Rational dx = x * d;
  BigInt whole = boost::multiprecision::numerator(dx) / boost::multiprecision::denominator(dx);
  Rational frac = dx - Rational(whole);
  return std::min(frac, Rational(1) - frac);
}

std::vector<Rational> tau_fixed_points(int d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  const Rational half(1, 2);
  std::set<Rational> points{Rational(0)};
  for (int j = 1; Rational(j, d + 1) <= half; ++j) points.insert(Rational(j, d + 1));
  if (d > 1) {
    for (int j = 1; Rational(j, d - 1) <= half; ++j) points.insert(Rational(j, d - 1));
  }
  return {points.begin(), points.end()};
}

bool crosses(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate()) return false;
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  return in_arc(c2.a(), c1.a(), c1.b()) != in_arc(c2.b(), c1.a(), c1.b());
}

bool disjoint(const Chord& c1, const Chord& c2) {
  if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
  return !crosses(c1, c2);
}

Rational endpoint_distance(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate()) throw std::invalid_argument("endpoint distance needs non-degenerate chords");
  if (c1 == c2) return 0;
  if (crosses(c1, c2)) throw std::invalid_argument("endpoint distance is undefined for crossing chords");
  // Orient c1 as (x1, y1) so that both endpoints of c2 lie in the closed ccw
  // arc [x1, y1]; then x2 is the endpoint of c2 met first going ccw from x1.
  Angle x1 = c1.a();
  Angle y1 = c1.b();
  if (!(in_closed_arc(c2.a(), x1, y1) && in_closed_arc(c2.b(), x1, y1))) std::swap(x1, y1);
  Angle x2 = c2.a();
  Angle y2 = c2.b();
  if (arc_length(x1, y2) < arc_length(x1, x2)) std::swap(x2, y2);
  return arc_length(x1, x2) + arc_length(y2, y1);
}

bool is_critical(int d, const Chord& ch) { return !ch.degenerate() && sigma(d, ch.a()) == sigma(d, ch.b()); }

std::optional<CriticalChord> as_critical(int d, const Chord& ch) {
  if (!is_critical(d, ch)) return std::nullopt;
  Rational k = (ch.b().value() - ch.a().value()) * d;
  return CriticalChord{ch, static_cast<int>(boost::multiprecision::numerator(k))};
}

Rational distance_to_nearest_critical(int d, const Chord& ch) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (ch.degenerate()) throw std::invalid_argument("nearest critical distance needs a non-degenerate chord");
  const Rational s = arc_length(ch.a(), ch.b());
  Rational best = 1;
  for (int k = 1; k < d; ++k) {
    Rational gap = s - Rational(k, d);
    if (gap < 0) gap = -gap;
    best = std::min(best, gap);
  }
  return best;
}

}  // namespace lamkit
