#include "lamkit/portrait.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lamkit {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Positions p < q and r < s of two chords on a 2d-gon interleave.
bool positions_cross(int p, int q, int r, int s) {
  if (p > q) std::swap(p, q);
  if (r > s) std::swap(r, s);
  bool r_in = p < r && r < q;
  bool s_in = p < s && s < q;
  return r_in != s_in;
}

}  // namespace

Rational SiblingCollection::short_arc() const { return arc_length(x, y) / d; }

Rational SiblingCollection::long_arc() const { return (Rational(1) - arc_length(x, y)) / d; }

int SiblingCollection::leaf_at(int index) const {
  if (index % 2 == 0) return index / 2;
  auto it = std::find(match.begin(), match.end(), (index - 1) / 2);
  return static_cast<int>(it - match.begin());
}

int SiblingCollection::partner(int index) const {
  if (index % 2 == 0) return 2 * match[at(index / 2)] + 1;
  return 2 * leaf_at(index);
}

std::array<Angle, 2> oriented_image(const Chord& image) {
  if (image.degenerate()) throw DegenerateImageError("image leaf is degenerate: " + image.str());
  Rational s = arc_length(image.a(), image.b());
  if (s == Rational(1, 2)) throw DiameterImageError("image leaf is a diameter: " + image.str());
  if (s < Rational(1, 2)) return {image.a(), image.b()};
  return {image.b(), image.a()};
}

std::vector<Angle> preimage_endpoints(int d, const Chord& image) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  auto [x, y] = oriented_image(image);
  const Rational eta = arc_length(x, y) / d;
  std::vector<Angle> points;
  points.reserve(at(2 * d));
  for (int i = 0; i < d; ++i) {
    Rational xi = (x.value() + i) / d;
    points.emplace_back(xi);
    points.emplace_back(xi + eta);
  }
  return points;
}

std::vector<std::vector<int>> noncrossing_matchings(int d) {
  if (d < 1) throw std::invalid_argument("matchings need d >= 1");
  // Pair the first position of each interval with every position of the
  // opposite parity, then recurse on the inside and the outside.
  std::vector<std::vector<int>> out;
  std::vector<int> match(at(d), -1);
  std::vector<std::pair<int, int>> pending;
  std::function<void()> rec = [&]() {
    if (pending.empty()) {
      out.push_back(match);
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo >= hi) {
      rec();
      pending.emplace_back(lo, hi);
      return;
    }
    for (int j = lo + 1; j < hi; j += 2) {
      int xpos = lo % 2 == 0 ? lo : j;
      int ypos = lo % 2 == 0 ? j : lo;
      match[at(xpos / 2)] = (ypos - 1) / 2;
      pending.emplace_back(j + 1, hi);
      pending.emplace_back(lo + 1, j);
      rec();
      pending.pop_back();
      pending.pop_back();
    }
    pending.emplace_back(lo, hi);
  };
  pending.emplace_back(0, 2 * d);
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

SiblingCollection make_collection(int d, const Chord& image, std::vector<int> match) {
  if (static_cast<int>(match.size()) != d) throw std::invalid_argument("matching must have d entries");
  std::vector<int> sorted = match;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(at(d));
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) throw std::invalid_argument("matching is not a permutation");
  for (int i = 0; i < d; ++i) {
    for (int k = i + 1; k < d; ++k) {
      if (positions_cross(2 * i, 2 * match[at(i)] + 1, 2 * k, 2 * match[at(k)] + 1)) {
        throw std::invalid_argument("matching has crossing leaves");
      }
    }
  }
  SiblingCollection c;
  c.d = d;
  c.image = image;
  auto [x, y] = oriented_image(image);
  c.x = x;
  c.y = y;
  c.points = preimage_endpoints(d, image);
  c.match = std::move(match);
  for (int i = 0; i < d; ++i) c.leaves.emplace_back(c.points[at(2 * i)], c.points[at(2 * c.match[at(i)] + 1)]);
  return c;
}

SiblingCollection collection_from_leaves(int d, const std::vector<Chord>& leaves) {
  if (static_cast<int>(leaves.size()) != d) throw std::invalid_argument("a full sibling collection has d leaves");
  const Chord img = image(d, leaves.front());
  for (const auto& leaf : leaves) {
    if (image(d, leaf) != img) throw std::invalid_argument("leaves do not share an image: " + leaf.str());
  }
  auto points = preimage_endpoints(d, img);
  std::vector<int> match(at(d), -1);
  for (const auto& leaf : leaves) {
    auto pa = std::find(points.begin(), points.end(), leaf.a());
    auto pb = std::find(points.begin(), points.end(), leaf.b());
    int ia = static_cast<int>(pa - points.begin());
    int ib = static_cast<int>(pb - points.begin());
    if (ia % 2 == ib % 2) throw std::invalid_argument("leaf does not join an x-preimage to a y-preimage");
    int xpos = ia % 2 == 0 ? ia : ib;
    int ypos = ia % 2 == 0 ? ib : ia;
    if (match[at(xpos / 2)] != -1) throw std::invalid_argument("leaves share an endpoint");
    match[at(xpos / 2)] = (ypos - 1) / 2;
  }
  return make_collection(d, img, std::move(match));
}

std::vector<SiblingCollection> enumerate_sibling_collections(int d, const Chord& image) {
  oriented_image(image);
  std::vector<SiblingCollection> out;
  for (auto& m : noncrossing_matchings(d)) out.push_back(make_collection(d, image, std::move(m)));
  return out;
}

SiblingPortrait build_portrait(const SiblingCollection& coll) {
  const int d = coll.d;
  const int n = 2 * d;
  const Rational unit(1, 2 * d);
  for (const auto& leaf : coll.leaves) {
    Rational k = leaf_length(leaf) / unit;
    if (boost::multiprecision::denominator(k) == 1) {
      throw BoundaryLeafError("leaf length is a multiple of 1/(2d): " + leaf.str());
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(at(n));
  for (int i = 0; i < n; ++i) {
    const Angle& s = coll.points[at(i)];
    const Angle& e = coll.points[at((i + 1) % n)];
    arcs.push_back({i, s, e, arc_length(s, e)});
  }

  SiblingPortrait p;
  p.collection = coll;
  p.arc_region.assign(at(n), -1);
  for (int start = 0; start < n; ++start) {
    if (p.arc_region[at(start)] >= 0) continue;
    Region r;
    const int id = static_cast<int>(p.regions.size());
    int cur = start;
    do {
      p.arc_region[at(cur)] = id;
      r.arcs.push_back(arcs[at(cur)]);
      int q = (cur + 1) % n;
      int leaf = coll.leaf_at(q);
      r.leaves.push_back(leaf);
      r.boundary_leaves.push_back(coll.leaves[at(leaf)]);
      cur = coll.partner(q);
    } while (cur != start);
    r.degree = static_cast<int>(r.arcs.size());
    bool all_short = std::all_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& a) { return a.length < unit; });
    bool all_long = std::all_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& a) { return a.length > unit; });
    if (all_short == all_long) throw std::logic_error("region is neither a C-region nor an R-region");
    r.kind = all_short ? RegionKind::C : RegionKind::R;
    p.regions.push_back(std::move(r));
  }
  p.leaf_regions.resize(at(d));
  for (int i = 0; i < d; ++i) {
    int pos = 2 * i;
    p.leaf_regions[at(i)] = {p.arc_region[at((pos + n - 1) % n)], p.arc_region[at(pos)]};
  }
  return p;
}

std::optional<CentralStrip> central_strip(const SiblingPortrait& p) {
  CentralStrip strip;
  std::set<int> leaves;
  for (std::size_t i = 0; i < p.regions.size(); ++i) {
    const auto& r = p.regions[i];
    if (r.kind != RegionKind::C || r.degree < 2) continue;
    strip.components.push_back(static_cast<int>(i));
    strip.short_arcs.insert(strip.short_arcs.end(), r.arcs.begin(), r.arcs.end());
    leaves.insert(r.leaves.begin(), r.leaves.end());
    strip.degree = strip.degree == 0 ? r.degree : std::min(strip.degree, r.degree);
  }
  if (strip.components.empty()) return std::nullopt;
  std::sort(strip.short_arcs.begin(), strip.short_arcs.end(), [](const Arc& a, const Arc& b) { return a.index < b.index; });
  strip.boundary_leaves.assign(leaves.begin(), leaves.end());
  strip.eta = p.collection.short_arc();
  return strip;
}

PlaneBicoloredTree dual_tree(const SiblingPortrait& p) {
  std::vector<RegionKind> colors;
  std::vector<std::vector<int>> rotation;
  for (const auto& r : p.regions) {
    colors.push_back(r.kind);
    rotation.push_back(r.leaves);
  }
  return PlaneBicoloredTree(std::move(colors), p.leaf_regions, std::move(rotation));
}

CriticalChordSet max_disjoint_critical_chords(int d, const Region& r) {
  CriticalChordSet out;
  out.count = r.degree - 1;
  const int k = r.degree;
  if (k < 2) return out;
  const Rational len = r.arcs.front().length;
  const Rational base = r.arcs.front().start.value();
  for (int j = 1; j < k; ++j) {
    Rational eps = len * (k - j) / k;
    Chord ch(Angle(base + eps), Angle(r.arcs[at(j)].start.value() + eps));
    auto crit = as_critical(d, ch);
    if (!crit) throw std::logic_error("arcs of a region are not 1/d translates");
    out.witness.push_back(*crit);
  }
  return out;
}

bool critical_chord_in_region(int d, const Region& r, const Chord& ch) {
  if (!is_critical(d, ch)) return false;
  auto inside = [&](const Angle& p) {
    return std::any_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& a) { return in_closed_arc(p, a.start, a.end); });
  };
  return inside(ch.a()) && inside(ch.b());
}

}  // namespace lamkit
