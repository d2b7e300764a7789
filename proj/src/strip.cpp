#include "lamkit/strip.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace lamkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Integer picture of a strip: every point is n/Q with 0 <= n < Q.
struct IntChord {
  u64 a = 0;
  u64 b = 0;
  bool operator==(const IntChord&) const = default;
};

struct IntChordHash {
  std::size_t operator()(const IntChord& c) const { return std::hash<u64>()(c.a * 0x9E3779B97F4A7C15ULL ^ c.b); }
};

IntChord make_int_chord(u64 p, u64 q) { return p <= q ? IntChord{p, q} : IntChord{q, p}; }

struct IntRegion {
  std::vector<std::pair<u64, u64>> arcs;
  std::vector<IntChord> leaves;
};

struct IntStrip {
  u64 Q = 1;
  std::vector<int> ids;  // region index in the portrait
  std::vector<IntRegion> regions;
};

inline u64 arc(u64 Q, u64 s, u64 e) { return e >= s ? e - s : Q - s + e; }
inline bool in_open(u64 Q, u64 p, u64 s, u64 e) {
  if (s == e || p == s) return false;
  return arc(Q, s, p) < arc(Q, s, e);
}
inline bool in_closed(u64 Q, u64 p, u64 s, u64 e) { return arc(Q, s, p) <= arc(Q, s, e); }
inline bool int_crosses(u64 Q, const IntChord& c1, const IntChord& c2) {
  if (c1.a == c1.b || c2.a == c2.b) return false;
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
  return in_open(Q, c2.a, c1.a, c1.b) != in_open(Q, c2.b, c1.a, c1.b);
}

bool is_vertex(const IntRegion& r, u64 p) {
  return std::any_of(r.arcs.begin(), r.arcs.end(), [&](const auto& a) { return a.first == p || a.second == p; });
}

// 0: disjoint, 1: touches in one vertex only, 2: enters.
int int_meets(u64 Q, const IntChord& ch, const IntRegion& r) {
  if (ch.a == ch.b) {
    for (const auto& [s, e] : r.arcs) {
      if (in_closed(Q, ch.a, s, e)) return 2;
    }
    return 0;
  }
  for (const auto& leaf : r.leaves) {
    if (int_crosses(Q, ch, leaf)) return 2;
  }
  for (const auto& [s, e] : r.arcs) {
    if (in_open(Q, ch.a, s, e) || in_open(Q, ch.b, s, e)) return 2;
  }
  bool va = is_vertex(r, ch.a);
  bool vb = is_vertex(r, ch.b);
  if (va && vb) return 2;
  return va || vb ? 1 : 0;
}

bool int_same_arc(u64 Q, const IntChord& ch, const IntRegion& r) {
  return std::any_of(r.arcs.begin(), r.arcs.end(),
                     [&](const auto& a) { return in_closed(Q, ch.a, a.first, a.second) && in_closed(Q, ch.b, a.first, a.second); });
}

struct IntEvent {
  std::size_t j = 0;
  std::vector<int> components;
  bool same_component = false;
};

struct ScanResult {
  std::vector<IntEvent> events;
  std::size_t touch_only = 0;
  std::size_t degenerate = 0;
};

// orbit[i] is l_{i+1}.
ScanResult scan_orbit(const IntStrip& strip, const std::vector<IntChord>& orbit) {
  ScanResult out;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    IntEvent ev;
    ev.j = i + 1;
    // A point is not a leaf; once the orbit collapses it no longer reenters.
    if (orbit[i].a == orbit[i].b) {
      ++out.degenerate;
      continue;
    }
    bool touched = false;
    for (std::size_t r = 0; r < strip.regions.size(); ++r) {
      int m = int_meets(strip.Q, orbit[i], strip.regions[r]);
      if (m == 2) {
        ev.components.push_back(strip.ids[r]);
        if (int_same_arc(strip.Q, orbit[i], strip.regions[r])) ev.same_component = true;
      } else if (m == 1) {
        touched = true;
      }
    }
    if (!ev.components.empty()) {
      out.events.push_back(std::move(ev));
    } else if (touched) {
      ++out.touch_only;
    }
  }
  return out;
}

// The orbit leaves and the sibling leaves must be pairwise unlinked to sit in
// one lamination. Returns false at the first crossing pair.
bool orbit_unlinked(u64 Q, const std::vector<IntChord>& orbit) {
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t k = i + 1; k < orbit.size(); ++k) {
      if (int_crosses(Q, orbit[i], orbit[k])) return false;
    }
  }
  return true;
}

bool orbit_unlinked_with(u64 Q, const std::vector<IntChord>& orbit, const std::vector<IntChord>& leaves) {
  for (const auto& c : orbit) {
    for (const auto& l : leaves) {
      if (int_crosses(Q, c, l)) return false;
    }
  }
  return true;
}

std::vector<IntChord> int_leaves(const SiblingCollection& coll, const std::vector<u64>& pts) {
  std::vector<IntChord> out;
  for (int i = 0; i < coll.d; ++i) out.push_back(make_int_chord(pts[at(2 * i)], pts[at(2 * coll.match[at(i)] + 1)]));
  return out;
}

// Orbit of the chord under t -> d t mod Q until the first repeat.
std::vector<IntChord> int_orbit(int d, u64 Q, IntChord start, std::size_t max_iters, bool& cycled) {
  std::vector<IntChord> orbit;
  std::unordered_map<IntChord, std::size_t, IntChordHash> seen;
  IntChord cur = start;
  cycled = false;
  while (orbit.size() < max_iters) {
    if (!seen.emplace(cur, orbit.size()).second) {
      cycled = true;
      break;
    }
    orbit.push_back(cur);
    u64 a = static_cast<u64>((static_cast<u128>(cur.a) * static_cast<u64>(d)) % Q);
    u64 b = static_cast<u64>((static_cast<u128>(cur.b) * static_cast<u64>(d)) % Q);
    cur = make_int_chord(a, b);
  }
  return orbit;
}

u64 to_int(const Angle& a, const BigInt& Q) {
  BigInt n = a.num() * (Q / a.den());
  return static_cast<u64>(n);
}

Angle to_angle(u64 n, u64 Q) { return Angle(BigInt(n), BigInt(Q)); }

IntStrip int_strip(const SiblingPortrait& p, const CentralStrip& strip, u64 Q, const std::vector<u64>& pts) {
  IntStrip s;
  s.Q = Q;
  const auto& coll = p.collection;
  const int n = 2 * coll.d;
  for (int id : strip.components) {
    const Region& r = p.regions[at(id)];
    IntRegion ir;
    for (const auto& a : r.arcs) ir.arcs.emplace_back(pts[at(a.index)], pts[at((a.index + 1) % n)]);
    for (int leaf : r.leaves) ir.leaves.push_back(make_int_chord(pts[at(2 * leaf)], pts[at(2 * coll.match[at(leaf)] + 1)]));
    s.ids.push_back(id);
    s.regions.push_back(std::move(ir));
  }
  return s;
}

Rational pow_rational(int d, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= d;
  return Rational(r);
}

bool enters_strip(const Chord& ch, const SiblingPortrait& p, const CentralStrip& strip) {
  return std::any_of(strip.components.begin(), strip.components.end(),
                     [&](int id) { return enters_region(ch, p.regions[at(id)]); });
}

// Critical chord within |l_k|'s distance to the nearest nonzero critical
// length, chosen outside the strip when one of the sampled positions is.
Part3Witness build_witness(int d, std::size_t j, const std::vector<Chord>& chain, const SiblingPortrait& p,
                           const CentralStrip& strip) {
  Part3Witness w;
  w.j = j;
  w.bound = strip.eta / pow_rational(d, j);
  std::size_t k = j;
  Rational len;
  while (k > 0) {
    --k;
    len = leaf_length(chain[k]);
    if (len * d * 2 >= 1) break;
  }
  w.k = k;
  w.bound = strip.eta / pow_rational(d, j - k);
  w.leaf_k = chain[k];
  // Orient l_k so that its ccw arc a -> b is the short side.
  Angle a = chain[k].a();
  Angle b = chain[k].b();
  if (arc_length(a, b) != len) std::swap(a, b);
  Rational dl = len * d;
  BigInt m = boost::multiprecision::numerator(dl) / boost::multiprecision::denominator(dl);
  if (dl - Rational(m) >= Rational(1, 2)) m += 1;
  if (m == 0) m = 1;
  const Rational crit = Rational(m) / d;
  const Rational delta = len >= crit ? len - crit : crit - len;
  std::optional<Part3Witness> fallback;
  for (int i = 0; i <= 8; ++i) {
    Rational t = delta * i / 8;
    Chord D = len >= crit ? Chord(Angle(a.value() + t), Angle(a.value() + t + crit))
                          : Chord(Angle(a.value() - t), Angle(b.value() + (delta - t)));
    auto cc = as_critical(d, D);
    if (!cc || crosses(D, chain[k])) continue;
    Part3Witness cand = w;
    cand.D = *cc;
    cand.achieved = endpoint_distance(chain[k], D);
    cand.valid = cand.achieved <= cand.bound;
    cand.outside_strip = !enters_strip(D, p, strip);
    if (cand.valid && cand.outside_strip) return cand;
    if (!fallback || (cand.valid && !fallback->valid)) fallback = cand;
  }
  if (fallback) return *fallback;
  return w;
}

struct Scaled {
  u64 Q = 1;
  std::vector<u64> pts;
};

Scaled scale_points(const SiblingCollection& coll) {
  BigInt Q = BigInt(coll.d) * boost::multiprecision::lcm(coll.x.den(), coll.y.den());
  if (Q > (BigInt(1) << 62)) throw std::out_of_range("denominator too large for the orbit kernel");
  Scaled s;
  s.Q = static_cast<u64>(Q);
  for (const auto& pt : coll.points) s.pts.push_back(to_int(pt, Q));
  return s;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INAPPLICABLE: return "INAPPLICABLE";
    case Verdict::TRUNCATED: return "TRUNCATED";
    case Verdict::EXCLUDED: return "EXCLUDED";
  }
  return "?";
}

OrbitTrace orbit_trace(int d, const Chord& ch, std::size_t max_iters) {
  OrbitTrace t;
  t.d = d;
  std::map<Chord, std::size_t> seen;
  Chord cur = ch;
  while (t.chords.size() < max_iters) {
    auto [it, fresh] = seen.emplace(cur, t.chords.size());
    if (!fresh) {
      t.cycled = true;
      t.cycle_start = it->second;
      break;
    }
    t.chords.push_back(cur);
    t.lengths.push_back(leaf_length(cur));
    t.critical_distance.push_back(cur.degenerate() ? Rational(0) : distance_to_nearest_critical(d, cur));
    cur = image(d, cur);
  }
  return t;
}

std::size_t leaf_growth(int d, const Rational& x) {
  const Rational limit(1, d + 1);
  if (!(x > 0 && x < limit)) throw std::domain_error("leaf growth needs 0 < x < 1/(d+1)");
  Rational cur = x;
  std::size_t i = 0;
  while (cur < limit) {
    Rational next = tau(d, cur);
    if (next <= cur) throw std::logic_error("leaf length failed to grow");
    cur = next;
    ++i;
  }
  return i;
}

bool enters_region(const Chord& ch, const Region& r) {
  if (ch.degenerate()) {
    return std::any_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& a) { return in_closed_arc(ch.a(), a.start, a.end); });
  }
  for (const auto& leaf : r.boundary_leaves) {
    if (crosses(ch, leaf)) return true;
  }
  for (const auto& a : r.arcs) {
    if (in_arc(ch.a(), a.start, a.end) || in_arc(ch.b(), a.start, a.end)) return true;
  }
  auto vertex = [&](const Angle& p) {
    return std::any_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& a) { return a.start == p || a.end == p; });
  };
  return vertex(ch.a()) && vertex(ch.b());
}

CSLReport verify_csl(const SiblingCollection& coll, std::size_t max_iters) {
  CSLReport rep;
  const int d = coll.d;
  rep.d = d;
  rep.image = coll.image;
  rep.match = coll.match;
  rep.eta = coll.short_arc();
  rep.long_arc = coll.long_arc();
  SiblingPortrait p;
  try {
    p = build_portrait(coll);
  } catch (const BoundaryLeafError& e) {
    rep.verdict = Verdict::INAPPLICABLE;
    rep.reason = e.what();
    return rep;
  }
  rep.strip = central_strip(p);
  if (!rep.strip) {
    rep.verdict = Verdict::INAPPLICABLE;
    rep.reason = "no central strip";
    return rep;
  }
  if (!(rep.long_arc > Rational(1, d + 1))) {
    rep.verdict = Verdict::INAPPLICABLE;
    rep.reason = "long arc length is not > 1/(d+1)";
    return rep;
  }
  rep.eta_bound = rep.eta < Rational(1, d * (d + 1));
  rep.image_length = leaf_length(coll.image) == rep.eta * d;

  Scaled sc = scale_points(coll);
  IntStrip istrip = int_strip(p, *rep.strip, sc.Q, sc.pts);
  bool cycled = false;
  auto orbit = int_orbit(d, sc.Q, make_int_chord(to_int(coll.x, sc.Q), to_int(coll.y, sc.Q)), max_iters, cycled);
  if (!orbit_unlinked(sc.Q, orbit) || !orbit_unlinked_with(sc.Q, orbit, int_leaves(coll, sc.pts))) {
    rep.verdict = Verdict::INAPPLICABLE;
    rep.reason = "orbit crosses itself or a sibling leaf";
    return rep;
  }
  ScanResult scan = scan_orbit(istrip, orbit);

  std::vector<Chord> tail;
  tail.reserve(orbit.size());
  for (const auto& c : orbit) tail.emplace_back(to_angle(c.a, sc.Q), to_angle(c.b, sc.Q));

  bool any_fail = false;
  bool any_truncated = false;
  for (int leaf : rep.strip->boundary_leaves) {
    LeafReport lr;
    lr.leaf = leaf;
    lr.chord = coll.leaves[at(leaf)];
    lr.iterations = orbit.size() + 1;
    lr.cycled = cycled;
    lr.touch_only = scan.touch_only;
    std::vector<Chord> chain{lr.chord};
    chain.insert(chain.end(), tail.begin(), tail.end());
    lr.degenerate = scan.degenerate;
    for (const auto& ev : scan.events) {
      const bool first = &ev == &scan.events.front();
      Reentry re{ev.j, chain[ev.j], ev.components, ev.same_component, first};
      if (ev.j == 1) lr.part1 = false;
      if (ev.j == 2 && ev.same_component) lr.part2 = false;
      if (ev.same_component) {
        auto w = build_witness(d, ev.j, chain, p, *rep.strip);
        w.first = first;
        // The lemma speaks about the first reentry only; later ones are
        // reported with their witness but do not decide the verdict.
        if (first && !(w.valid && w.outside_strip)) lr.part3 = false;
        lr.witnesses.push_back(std::move(w));
      }
      lr.reentries.push_back(std::move(re));
    }
    if (!lr.part1 || !lr.part2 || !lr.part3) {
      lr.verdict = Verdict::FAIL;
      any_fail = true;
    } else if (!cycled) {
      lr.verdict = Verdict::TRUNCATED;
      any_truncated = true;
    }
    rep.leaves.push_back(std::move(lr));
  }
  if (any_fail || !rep.eta_bound || !rep.image_length) {
    rep.verdict = Verdict::FAIL;
  } else if (any_truncated) {
    rep.verdict = Verdict::TRUNCATED;
  }
  return rep;
}

UnicriticalReport verify_unicritical(const SiblingCollection& coll, std::size_t max_iters) {
  UnicriticalReport u;
  u.csl = verify_csl(coll, max_iters);
  if (u.csl.verdict == Verdict::INAPPLICABLE) {
    u.verdict = Verdict::INAPPLICABLE;
    u.reason = u.csl.reason;
    return u;
  }
  if (u.csl.strip->degree != coll.d) {
    u.verdict = Verdict::INAPPLICABLE;
    u.reason = "central strip degree is not d";
    return u;
  }
  for (const auto& lr : u.csl.leaves) {
    for (const auto& re : lr.reentries) u.same_component_reentries += re.same_component ? 1 : 0;
  }
  if (u.same_component_reentries > 0 || u.csl.verdict == Verdict::FAIL) {
    u.verdict = Verdict::FAIL;
  } else {
    u.verdict = u.csl.verdict;
  }
  return u;
}

CriticalSweep closest_critical_sweep(const Rational& x, std::size_t max_iters) {
  CriticalSweep out;
  const Rational lo(1, 4);
  const Rational hi(5, 12);
  std::map<Rational, std::size_t> seen;
  std::vector<Rational> seq;
  Rational cur = x;
  bool cycled = false;
  std::size_t cycle_len = 0;
  while (seq.size() < max_iters) {
    auto [it, fresh] = seen.emplace(cur, seq.size());
    if (!fresh) {
      cycled = true;
      cycle_len = seq.size() - it->second;
      break;
    }
    seq.push_back(cur);
    cur = tau(3, cur);
  }
  if (cycled && cycle_len == 1) {
    out.verdict = Verdict::EXCLUDED;
    out.sequence = seq;
    return out;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] > lo && seq[i] < hi) {
      out.index = i;
      out.value = seq[i];
      out.sequence.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return out;
    }
  }
  out.sequence = seq;
  out.verdict = cycled ? Verdict::FAIL : Verdict::TRUNCATED;
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("LAMKIT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Shape {
  std::vector<int> match;
  SiblingPortrait portrait;  // over the default image; only indices are reused
  CentralStrip strip;
};

struct ImageJob {
  u64 q = 1;
  u64 a = 0;  // x = a/q
  u64 s = 1;  // y = (a+s)/q
};

struct ImageResult {
  bool compatible_image = false;
  std::size_t collections = 0;
  std::size_t leaves = 0;
  std::size_t part1 = 0;
  std::size_t part2 = 0;
  std::size_t first_same = 0;
  std::size_t first_ok = 0;
  std::size_t later_same = 0;
  std::size_t later_valid = 0;
  std::size_t touch = 0;
  std::size_t truncated = 0;
  std::size_t eta = 0;
  std::vector<CSLReport> failures;
};

ImageResult run_image(int d, const ImageJob& job, const std::vector<Shape>& shapes, std::size_t max_iters) {
  ImageResult res;
  const u64 Q = static_cast<u64>(d) * job.q;
  const u64 x = job.a * static_cast<u64>(d);
  const u64 y = ((job.a + job.s) % job.q) * static_cast<u64>(d);
  std::vector<u64> pts;
  for (int i = 0; i < d; ++i) {
    u64 xi = (job.a + static_cast<u64>(i) * job.q) % Q;
    pts.push_back(xi);
    pts.push_back((xi + job.s) % Q);
  }
  bool cycled = false;
  auto orbit = int_orbit(d, Q, make_int_chord(x, y), max_iters, cycled);
  const Rational eta(static_cast<long long>(job.s), static_cast<long long>(Q));
  const bool eta_ok = eta < Rational(1, d * (d + 1));
  if (!orbit_unlinked(Q, orbit)) return res;
  res.compatible_image = true;
  for (const auto& sh : shapes) {
    if (!orbit_unlinked_with(Q, orbit, int_leaves(sh.portrait.collection, pts))) continue;
    ++res.collections;
    IntStrip istrip = int_strip(sh.portrait, sh.strip, Q, pts);
    ScanResult scan = scan_orbit(istrip, orbit);
    const std::size_t nleaves = sh.strip.boundary_leaves.size();
    res.leaves += nleaves;
    res.touch += scan.touch_only * nleaves;
    if (!cycled) res.truncated += nleaves;
    if (!eta_ok) ++res.eta;
    bool needs_exact = false;
    for (const auto& ev : scan.events) {
      if (ev.j == 1 || ev.same_component) needs_exact = true;
    }
    if (!needs_exact) continue;
    Chord img(Angle(BigInt(job.a), BigInt(job.q)), Angle(BigInt(job.a + job.s), BigInt(job.q)));
    CSLReport rep = verify_csl(make_collection(d, img, sh.match), max_iters);
    for (const auto& lr : rep.leaves) {
      res.part1 += lr.part1 ? 0 : 1;
      res.part2 += lr.part2 ? 0 : 1;
      for (const auto& w : lr.witnesses) {
        if (w.first) {
          ++res.first_same;
          res.first_ok += w.valid && w.outside_strip ? 1 : 0;
        } else {
          ++res.later_same;
          res.later_valid += w.valid ? 1 : 0;
        }
      }
    }
    if (rep.verdict == Verdict::FAIL && res.failures.size() < 4) res.failures.push_back(std::move(rep));
  }
  return res;
}

}  // namespace

SweepResult csl_sweep(const SweepConfig& cfg) {
  const int d = cfg.d;
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  SweepResult out;
  out.d = d;

  std::vector<Shape> shapes;
  const Chord base(Angle(1, 8 * d), Angle(3, 8 * d));
  for (auto& m : noncrossing_matchings(d)) {
    auto p = build_portrait(make_collection(d, base, m));
    auto strip = central_strip(p);
    if (!strip) continue;
    shapes.push_back({m, std::move(p), std::move(*strip)});
  }

  // Images a/q -> (a+s)/q with short arc s/q < 1/(d+1), each chord once.
  std::vector<ImageJob> jobs;
  auto admissible = [&](u64 q, u64 a, u64 s) {
    if (s == 0 || static_cast<u64>(d + 1) * s >= q) return false;
    return std::gcd(std::gcd(a, (a + s) % q), q) == 1;
  };
  const u64 ex = static_cast<u64>(std::min(cfg.exhaustive_max, cfg.denominator_max));
  for (u64 q = 2; q <= ex; ++q) {
    for (u64 a = 0; a < q; ++a) {
      for (u64 s = 1; static_cast<u64>(d + 1) * s < q; ++s) {
        if (admissible(q, a, s)) jobs.push_back({q, a, s});
      }
    }
  }
  const u64 qmax = static_cast<u64>(cfg.denominator_max);
  if (qmax > ex) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<u64> qdist(ex + 1, qmax);
    std::size_t drawn = 0;
    while (drawn < cfg.samples) {
      u64 q = qdist(rng);
      u64 smax = (q - 1) / static_cast<u64>(d + 1);
      if (smax == 0) continue;
      u64 a = std::uniform_int_distribution<u64>(0, q - 1)(rng);
      u64 s = std::uniform_int_distribution<u64>(1, smax)(rng);
      if (!admissible(q, a, s)) continue;
      jobs.push_back({q, a, s});
      ++drawn;
    }
    out.complete = false;
  }
  out.images = jobs.size();

  std::vector<ImageResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_image(d, jobs[i], shapes, cfg.max_iters);
  };
  unsigned nthreads = cfg.threads ? cfg.threads : default_threads();
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) {
    out.compatible_images += r.compatible_image ? 1 : 0;
    out.collections += r.collections;
    out.leaves += r.leaves;
    out.part1_violations += r.part1;
    out.part2_violations += r.part2;
    out.first_same_component += r.first_same;
    out.first_witnessed += r.first_ok;
    out.later_same_component += r.later_same;
    out.later_witnessed += r.later_valid;
    out.touch_only += r.touch;
    out.truncated += r.truncated;
    out.eta_bound_violations += r.eta;
    for (auto& f : r.failures) {
      if (out.failures.size() < 8) out.failures.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace lamkit
