#include "lamkit/polygon.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "lamkit/strip.hpp"

namespace lamkit {

namespace {

using u64 = std::uint64_t;

template <class T>
int cyclic_descents(const std::vector<T>& seq) {
  int n = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[(i + 1) % seq.size()] < seq[i]) ++n;
  }
  return n;
}

template <class T>
bool has_common(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<T> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return !both.empty();
}

// All of b in one open gap of a, assuming no common vertex.
template <class T>
bool one_gap(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() < 2 || b.size() < 2) return true;
  std::sort(a.begin(), a.end());
  std::size_t gap = a.size();
  for (const auto& v : b) {
    std::size_t g = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), v) - a.begin()) % a.size();
    if (gap == a.size()) {
      gap = g;
    } else if (g != gap) {
      return false;
    }
  }
  return true;
}

std::vector<Angle> step(int d, const std::vector<Angle>& v) {
  std::vector<Angle> out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(sigma(d, a));
  return out;
}

bool all_distinct(std::vector<Angle> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::vector<Angle> sorted(std::vector<Angle> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string Polygon::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ", ";
    out += vertices[i].str();
  }
  return out + "}";
}

Polygon make_polygon(std::vector<Angle> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("a polygon needs at least two vertices");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("polygon vertices must be distinct");
  }
  return Polygon{std::move(vertices)};
}

std::string reason_name(IRPReason r) {
  switch (r) {
    case IRPReason::None: return "none";
    case IRPReason::NotPeriodic: return "not-periodic";
    case IRPReason::RotatedReturn: return "rotated-return";
    case IRPReason::OrderReversed: return "order-reversed";
    case IRPReason::OrbitOverlap: return "orbit-overlap";
  }
  return "?";
}

bool hulls_disjoint(const std::vector<Angle>& a, const std::vector<Angle>& b) {
  if (has_common(a, b)) return false;
  return one_gap(a, b);
}

bool hulls_disjoint_by_sides(const std::vector<Angle>& a, const std::vector<Angle>& b) {
  if (has_common(a, b)) return false;
  auto sides = [](std::vector<Angle> v) {
    std::sort(v.begin(), v.end());
    std::vector<Chord> out;
    if (v.size() == 2) out.emplace_back(v[0], v[1]);
    if (v.size() > 2) {
      for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(v[i], v[(i + 1) % v.size()]);
    }
    return out;
  };
  for (const auto& s : sides(a)) {
    for (const auto& t : sides(b)) {
      if (crosses(s, t)) return false;
    }
  }
  return true;
}

bool preserves_order(const std::vector<Angle>& from, const std::vector<Angle>& to) {
  if (from.size() != to.size()) throw std::invalid_argument("vertex lists differ in size");
  if (!all_distinct(to)) return false;
  if (from.size() < 3) return true;
  std::vector<std::size_t> idx(from.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return from[i] < from[j]; });
  std::vector<Angle> seq;
  for (auto i : idx) seq.push_back(to[i]);
  return cyclic_descents(seq) == 1;
}

IRPVerdict is_identity_return(int d, const Polygon& P, int p, bool check_order) {
  if (p < 1) throw std::invalid_argument("period must be at least 1");
  IRPVerdict v;
  std::vector<std::vector<Angle>> orbit{P.vertices};
  for (int t = 1; t <= p; ++t) {
    orbit.push_back(step(d, orbit.back()));
    if (!all_distinct(orbit.back())) {
      v.reason = IRPReason::NotPeriodic;
      v.iterate = t;
      v.detail = "two vertices collide at iterate " + std::to_string(t);
      return v;
    }
  }
  if (orbit[static_cast<std::size_t>(p)] != orbit.front()) {
    v.reason = IRPReason::NotPeriodic;
    v.iterate = p;
    v.detail = "sigma^p does not fix every vertex";
    return v;
  }
  for (int q = 1; q < p; ++q) {
    if (orbit[static_cast<std::size_t>(q)] == orbit.front()) {
      v.reason = IRPReason::NotPeriodic;
      v.iterate = q;
      v.detail = "least period is " + std::to_string(q);
      return v;
    }
  }
  const auto base = sorted(orbit.front());
  for (int q = 1; q < p; ++q) {
    if (sorted(orbit[static_cast<std::size_t>(q)]) == base) {
      v.reason = IRPReason::RotatedReturn;
      v.iterate = q;
      v.detail = "returns as a set at iterate " + std::to_string(q) + " with vertices permuted";
      return v;
    }
  }
  if (check_order) {
    for (int t = 0; t < p; ++t) {
      if (!preserves_order(orbit[static_cast<std::size_t>(t)], orbit[static_cast<std::size_t>(t) + 1])) {
        v.reason = IRPReason::OrderReversed;
        v.iterate = t;
        v.detail = "circular order not preserved from iterate " + std::to_string(t);
        return v;
      }
    }
  }
  for (int t = 0; t < p; ++t) {
    for (int u = t + 1; u < p; ++u) {
      if (!hulls_disjoint(orbit[static_cast<std::size_t>(t)], orbit[static_cast<std::size_t>(u)])) {
        v.reason = IRPReason::OrbitOverlap;
        v.iterate = u;
        v.detail = "iterates " + std::to_string(t) + " and " + std::to_string(u) + " meet";
        return v;
      }
    }
  }
  v.is_identity_return = true;
  return v;
}

Chord PolygonOrbit::side(std::size_t t, std::size_t j) const {
  const auto& v = images[t];
  return Chord(v[j], v[(j + 1) % v.size()]);
}

Rational PolygonOrbit::gap(std::size_t t, std::size_t j) const {
  const auto& v = images[t];
  return arc_length(v[j], v[(j + 1) % v.size()]);
}

PolygonOrbit polygon_orbit(int d, const Polygon& P, int p) {
  PolygonOrbit o;
  o.d = d;
  o.period = p;
  o.verdict = is_identity_return(d, P, p);
  o.images.push_back(P.vertices);
  for (int t = 1; t < p; ++t) o.images.push_back(step(d, o.images.back()));
  const std::size_t n = o.images.size();
  for (std::size_t t = 0; t < n; ++t) o.order_preserved.push_back(preserves_order(o.images[t], step(d, o.images[t])));
  o.disjoint.assign(n, std::vector<bool>(n, false));
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) {
      if (t != u) o.disjoint[t][u] = hulls_disjoint(o.images[t], o.images[u]);
    }
  }
  return o;
}

Polygon example_period3(int d) {
  if (d < 3) throw std::invalid_argument("the period 3 example needs d >= 3");
  std::vector<Angle> v;
  for (int k = 1; k < d; ++k) {
    std::array<int, 3> digits{0, 0, k};
    v.push_back(periodic_point(d, digits));
  }
  std::array<int, 3> last{d - 1, d - 1, 0};
  v.push_back(periodic_point(d, last));
  return make_polygon(std::move(v));
}

Polygon example_period2(int d) {
  if (d < 3) throw std::invalid_argument("the period 2 example needs d >= 3");
  std::vector<Angle> v;
  for (int k = 1; k < d; ++k) {
    std::array<int, 2> digits{0, k};
    v.push_back(periodic_point(d, digits));
  }
  return make_polygon(std::move(v));
}

Polygon example_sigma4_quadrilateral() {
  std::vector<Angle> v;
  for (auto digits : {std::array<int, 3>{1, 3, 2}, {0, 3, 2}, {0, 2, 2}, {2, 0, 0}}) v.push_back(periodic_point(4, digits));
  return make_polygon(std::move(v));
}

Chord sigma4_special_side() {
  std::array<int, 3> a{0, 2, 2};
  std::array<int, 3> b{2, 0, 0};
  return Chord(periodic_point(4, a), periodic_point(4, b));
}

Polygon impostor_triangle() { return make_polygon({Angle(1, 8), Angle(1, 4), Angle(7, 8)}); }

QuadrilateralCheck check_sigma4_quadrilateral() {
  QuadrilateralCheck c;
  c.verdict = is_identity_return(4, example_sigma4_quadrilateral(), 3);
  Chord side = sigma4_special_side();
  for (int t = 0; t < 3; ++t) {
    c.side_distance.push_back(distance_to_nearest_critical(4, side));
    side = image(4, side);
  }
  c.min_distance = *std::min_element(c.side_distance.begin(), c.side_distance.end());
  c.stays_far = c.min_distance >= Rational(1, 20);
  return c;
}

namespace {

struct Searcher {
  int d;
  int k;
  int p;
  u64 M;
  std::vector<std::vector<u64>> img;  // img[t][n] = d^t n mod M
  u64 budget;
  std::atomic<u64>* nodes;
  std::atomic<bool>* stop;

  bool extend_ok(const std::vector<u64>& verts) const {
    const std::size_t n = verts.size();
    const u64 v = verts.back();
    const u64 v0 = verts.front();
    std::vector<std::vector<u64>> sets(static_cast<std::size_t>(p));
    sets[0] = verts;
    for (int t = 1; t < p; ++t) {
      const auto& row = img[static_cast<std::size_t>(t)];
      // v0 is the least vertex of the whole orbit.
      if (row[v] <= v0) return false;
      auto& s = sets[static_cast<std::size_t>(t)];
      s.reserve(n);
      for (u64 w : verts) s.push_back(row[w]);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s[i] == s.back()) return false;
      }
      if (n >= 3 && cyclic_descents(s) != 1) return false;
    }
    for (int t = 0; t < p; ++t) {
      for (int u = t + 1; u < p; ++u) {
        const auto& a = sets[static_cast<std::size_t>(t)];
        const auto& b = sets[static_cast<std::size_t>(u)];
        if (has_common(a, b) || !one_gap(a, b)) return false;
      }
    }
    return true;
  }

  void dfs(std::vector<u64>& verts, std::vector<std::vector<u64>>& out) const {
    if (stop->load(std::memory_order_relaxed)) return;
    if (nodes->fetch_add(1, std::memory_order_relaxed) >= budget) {
      stop->store(true);
      return;
    }
    if (static_cast<int>(verts.size()) == k) {
      out.push_back(verts);
      return;
    }
    for (u64 v = verts.back() + 1; v < M; ++v) {
      verts.push_back(v);
      if (extend_ok(verts)) dfs(verts, out);
      verts.pop_back();
    }
  }

  int period_of(u64 v) const {
    for (int t = 1; t < p; ++t) {
      if (img[static_cast<std::size_t>(t)][v] == v) return t;
    }
    return p;
  }
};

}  // namespace

SearchResult search_irp(int d, int k, int p, const SearchLimits& limits) {
  if (d < 2 || k < 2 || p < 1) throw std::invalid_argument("search needs d >= 2, k >= 2, p >= 1");
  BigInt Mbig = 1;
  for (int i = 0; i < p; ++i) Mbig *= d;
  Mbig -= 1;
  if (Mbig > BigInt(limits.max_points)) throw std::invalid_argument("d^p - 1 exceeds the configured point bound");
  SearchResult res;
  res.d = d;
  res.k = k;
  res.p = p;
  const u64 M = static_cast<u64>(Mbig);

  std::atomic<u64> nodes{0};
  std::atomic<bool> stop{false};
  Searcher s{d, k, p, M, {}, limits.node_budget, &nodes, &stop};
  s.img.assign(static_cast<std::size_t>(p), std::vector<u64>(M));
  for (u64 n = 0; n < M; ++n) s.img[0][n] = n;
  for (int t = 1; t < p; ++t) {
    for (u64 n = 0; n < M; ++n) s.img[static_cast<std::size_t>(t)][n] = (s.img[static_cast<std::size_t>(t) - 1][n] * static_cast<u64>(d)) % M;
  }

  std::vector<std::vector<std::vector<u64>>> found(M);
  std::atomic<u64> next{0};
  auto worker = [&]() {
    for (u64 v0 = next++; v0 < M; v0 = next++) {
      std::vector<u64> verts{v0};
      if (!s.extend_ok(verts)) continue;
      s.dfs(verts, found[v0]);
    }
  };
  unsigned nthreads = limits.threads ? limits.threads : default_threads();
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  res.nodes = nodes.load();
  res.complete = !stop.load();
  for (const auto& bucket : found) {
    for (const auto& verts : bucket) {
      int lcm = 1;
      for (u64 v : verts) lcm = std::lcm(lcm, s.period_of(v));
      if (lcm != p) continue;
      std::vector<Angle> vs;
      for (u64 v : verts) vs.emplace_back(BigInt(v), BigInt(M));
      Polygon P = make_polygon(std::move(vs));
      if (is_identity_return(d, P, p).is_identity_return) {
        res.orbits.push_back(std::move(P));
      } else {
        ++res.rejected;
      }
    }
  }
  std::sort(res.orbits.begin(), res.orbits.end());
  return res;
}

bool verify_no_period2(int d, int k, const SearchLimits& limits) {
  auto r = search_irp(d, k, 2, limits);
  if (!r.complete) throw std::runtime_error("period 2 search did not complete");
  return r.orbits.empty();
}

std::string case_name(ApproachCase c) {
  switch (c) {
    case ApproachCase::None: return "none";
    case ApproachCase::TwoChords: return "two-chords";
    case ApproachCase::SameChord: return "same-chord";
  }
  return "?";
}

namespace {

// Critical chords of sigma_3 lying in a gap of the polygon at iterate t that
// are within 1/12 of side j, as (gap, inner arc) pairs.
std::vector<NearChord> near_chords(const PolygonOrbit& o, std::size_t t, std::size_t j) {
  const std::size_t k = o.base().size();
  const Rational limit(1, 12);
  std::vector<NearChord> out;
  const Rational gj = o.gap(t, j);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational gi = o.gap(t, i);
    for (const Rational& c : {Rational(1, 3), Rational(2, 3)}) {
      if (c > gi) continue;
      Rational dist = i == j ? gj - c : (Rational(1) - gj) - c;
      if (dist < limit) out.push_back({i, c});
    }
  }
  return out;
}

}  // namespace

Sigma3Analysis analyze_orbit_sigma3(const PolygonOrbit& orbit) {
  if (orbit.d != 3) throw std::invalid_argument("the analysis applies to sigma_3 orbits only");
  if (!orbit.verdict.is_identity_return) throw std::invalid_argument("orbit is not identity-return");
  Sigma3Analysis a;
  const std::size_t k = orbit.base().size();
  const std::size_t p = orbit.images.size();
  a.k = static_cast<int>(k);
  a.period = static_cast<int>(p);
  const Rational lo(1, 4);
  const Rational hi(5, 12);
  std::vector<std::vector<Rational>> len(p, std::vector<Rational>(k));
  for (std::size_t t = 0; t < p; ++t) {
    for (std::size_t j = 0; j < k; ++j) len[t][j] = leaf_length(orbit.side(t, j));
  }
  auto near = [&](std::size_t t, std::size_t j) { return len[t][j] > lo && len[t][j] < hi; };

  for (std::size_t j = 0; j < k; ++j) {
    SideReport s;
    s.side = j;
    for (std::size_t t = 0; t < p; ++t) {
      s.lengths.push_back(len[t][j]);
      if (len[t][j] == lo || len[t][j] == Rational(1, 2)) a.no_fixed_lengths = false;
      if (!s.near_critical && near(t, j)) s.near_critical = t;
    }
    if (!s.near_critical) a.close_to_critical = false;
    a.sides.push_back(std::move(s));
  }

  auto common_chord = [&](std::size_t t, std::size_t x, std::size_t y) {
    auto cx = near_chords(orbit, t, x);
    auto cy = near_chords(orbit, t, y);
    for (const auto& u : cx) {
      for (const auto& w : cy) {
        if (u.gap == w.gap && u.inner == w.inner) return true;
      }
    }
    return false;
  };

  bool pairs_ok = true;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      if (len[0][x] != len[0][y]) continue;
      EqualPair e{x, y, {}, false, false};
      for (std::size_t t = 0; t < p; ++t) {
        if (near(t, x) && near(t, y)) e.near_iterates.push_back(t);
      }
      e.unique = e.near_iterates.size() == 1;
      e.straddles = e.unique && !common_chord(e.near_iterates.front(), x, y);
      pairs_ok = pairs_ok && e.unique && e.straddles;
      a.equal_pairs.push_back(std::move(e));
    }
  }

  for (std::size_t t = 0; t < p; ++t) {
    std::vector<std::size_t> close;
    for (std::size_t j = 0; j < k; ++j) {
      if (near(t, j)) close.push_back(j);
    }
    if (close.size() < 2) continue;
    std::sort(close.begin(), close.end(), [&](std::size_t x, std::size_t y) { return len[t][x] > len[t][y]; });
    Approach ap;
    ap.t = t;
    ap.a = std::min(close[0], close[1]);
    ap.b = std::max(close[0], close[1]);
    if (common_chord(t, ap.a, ap.b)) {
      ap.kind = ApproachCase::SameChord;
    } else if (!near_chords(orbit, t, ap.a).empty() && !near_chords(orbit, t, ap.b).empty()) {
      ap.kind = ApproachCase::TwoChords;
    }
    const Rational shorter = std::min(len[t][ap.a], len[t][ap.b]);
    ap.longest = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == ap.a || j == ap.b) continue;
      if (!(len[t][j] < shorter)) ap.longest = false;
      if (!ap.other || len[t][j] > len[t][*ap.other]) ap.other = j;
    }
    const std::size_t next = (t + 1) % p;
    const Rational top = *std::max_element(len[next].begin(), len[next].end());
    if (ap.kind == ApproachCase::TwoChords) {
      ap.successor_rule = ap.other && len[next][*ap.other] == top;
    } else if (ap.kind == ApproachCase::SameChord) {
      ap.successor_rule = len[next][ap.a] == top || len[next][ap.b] == top;
    }
    if (ap.kind != ApproachCase::None && ap.longest) {
      a.thinpoly = true;
      if (!ap.successor_rule) a.longest_rule = false;
    }
    a.approaches.push_back(std::move(ap));
  }
  a.ok = a.no_fixed_lengths && a.close_to_critical && pairs_ok && a.thinpoly && a.longest_rule;
  return a;
}

}  // namespace lamkit
