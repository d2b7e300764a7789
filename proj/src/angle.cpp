#include "lamkit/angle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lamkit {

namespace {

Rational reduce_mod_one(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt m = n % d;
  if (m < 0) m += d;
  return make_rational(m, d);
}

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

void check_base(int d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  return make_rational(num, den);
}

Angle::Angle(const BigInt& num, const BigInt& den) : value_(reduce_mod_one(make_rational(num, den))) {}

Angle::Angle(const Rational& value) : value_(reduce_mod_one(value)) {}

BigInt Angle::num() const { return boost::multiprecision::numerator(value_); }
BigInt Angle::den() const { return boost::multiprecision::denominator(value_); }

std::string Angle::str() const { return num().str() + "/" + den().str(); }

Angle angle(const BigInt& num, const BigInt& den) { return Angle(num, den); }

Angle parse_angle(std::string_view text) { return Angle(parse_rational(text)); }

Angle sigma(int d, const Angle& a) {
  check_base(d);
  return Angle(a.num() * d, a.den());
}

Angle sigma_pow(int d, const Angle& a, std::size_t n) {
  check_base(d);
  BigInt factor = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n));
  return Angle(a.num() * factor, a.den());
}

std::vector<int> itinerary(int d, const Angle& a, std::size_t length) {
  check_base(d);
  std::vector<int> digits;
  digits.reserve(length);
  BigInt num = a.num();
  const BigInt den = a.den();
  for (std::size_t i = 0; i < length; ++i) {
    BigInt scaled = num * d;
    BigInt digit = scaled / den;
    digits.push_back(static_cast<int>(digit));
    num = scaled - digit * den;
  }
  return digits;
}

Angle periodic_point(int d, std::span<const int> digits) {
  check_base(d);
  if (digits.empty()) throw std::invalid_argument("periodic_point needs at least one digit");
  BigInt n = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= d) throw std::invalid_argument("digit out of range for base");
    n = n * d + digit;
  }
  BigInt m = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(digits.size())) - 1;
  return Angle(n, m);
}

Rational arc_length(const Angle& start, const Angle& end) {
  Rational diff = end.value() - start.value();
  if (diff < 0) diff += 1;
  return diff;
}

bool in_arc(const Angle& a, const Angle& start, const Angle& end) {
  Rational offset = arc_length(start, a);
  return offset > 0 && offset < arc_length(start, end);
}

bool in_closed_arc(const Angle& a, const Angle& start, const Angle& end) {
  return arc_length(start, a) <= arc_length(start, end);
}

std::string Itinerary::str() const {
  std::string sep = base > 10 ? "," : "";
  auto join = [&](const std::vector<int>& ds) {
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (i > 0) out += sep;
      out += std::to_string(ds[i]);
    }
    return out;
  };
  return join(preperiod) + "(" + join(period) + ")";
}

void validate(const Itinerary& it) {
  check_base(it.base);
  if (it.period.empty()) throw std::invalid_argument("itinerary period must be nonempty");
  auto bad = [&](int digit) { return digit < 0 || digit >= it.base; };
  if (std::any_of(it.preperiod.begin(), it.preperiod.end(), bad) ||
      std::any_of(it.period.begin(), it.period.end(), bad)) {
    throw std::invalid_argument("itinerary digit out of range");
  }
}

Itinerary canonicalize(const Itinerary& it) {
  validate(it);
  Itinerary out = it;
  const std::size_t p = out.period.size();
  for (std::size_t q = 1; q <= p; ++q) {
    if (p % q != 0) continue;
    bool repeats = true;
    for (std::size_t i = q; i < p && repeats; ++i) repeats = out.period[i] == out.period[i - q];
    if (repeats) {
      out.period.resize(q);
      break;
    }
  }
  while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
    std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
    out.preperiod.pop_back();
  }
  return out;
}

Itinerary eventual_itinerary(int d, const Angle& a) {
  check_base(d);
  std::map<Rational, std::size_t> seen;
  std::vector<int> digits;
  Angle cur = a;
  while (true) {
    auto [it, inserted] = seen.emplace(cur.value(), digits.size());
    if (!inserted) {
      Itinerary out;
      out.base = d;
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return out;
    }
    BigInt scaled = cur.num() * d;
    digits.push_back(static_cast<int>(BigInt(scaled / cur.den())));
    cur = Angle(scaled, cur.den());
  }
}

Angle point_from_itinerary(const Itinerary& it) {
  validate(it);
  const int d = it.base;
  BigInt n = 0;
  for (int digit : it.period) n = n * d + digit;
  BigInt m = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(it.period.size())) - 1;
  // Tail value taken before reduction mod 1 so that (d-1)(d-1)... reads as 1.
  Rational value = make_rational(n, m);
  for (auto digit = it.preperiod.rbegin(); digit != it.preperiod.rend(); ++digit) {
    value = (value + *digit) / d;
  }
  return Angle(value);
}

}  // namespace lamkit
