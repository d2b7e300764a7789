#include "lamkit/census.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lamkit {

namespace {
std::size_t at(int i) { return static_cast<std::size_t>(i); }
}  // namespace

Chord default_image(int d) { return Chord(Angle(1, 8 * d), Angle(3, 8 * d)); }

std::vector<int> rotate_matching(const std::vector<int>& match, int r) {
  const int d = static_cast<int>(match.size());
  std::vector<int> out(match.size());
  for (int i = 0; i < d; ++i) out[at(((i + r) % d + d) % d)] = ((match[at(i)] + r) % d + d) % d;
  return out;
}

std::vector<int> canonical_matching(const std::vector<int>& match) {
  std::vector<int> best = match;
  for (int r = 1; r < static_cast<int>(match.size()); ++r) best = std::min(best, rotate_matching(match, r));
  return best;
}

std::vector<std::vector<int>> matching_classes(int d) {
  std::set<std::vector<int>> reps;
  for (const auto& m : noncrossing_matchings(d)) reps.insert(canonical_matching(m));
  return {reps.begin(), reps.end()};
}

long burnside_matching_count(int d) {
  auto all = noncrossing_matchings(d);
  long fixed = 0;
  for (int r = 0; r < d; ++r) {
    for (const auto& m : all) fixed += rotate_matching(m, r) == m ? 1 : 0;
  }
  if (fixed % d != 0) throw std::logic_error("Burnside sum not divisible by d");
  return fixed / d;
}

SiblingPortrait tree_to_portrait(const PlaneBicoloredTree& t, const Chord& image) {
  const int d = static_cast<int>(t.edge_count());
  // Start on an edge leaving an R vertex so that even steps land in C
  // vertices; step j is the point between arc j-1 and arc j.
  int start = -1;
  for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
    if (t.color(v) == RegionKind::R) {
      start = v;
      break;
    }
  }
  if (start < 0) throw std::invalid_argument("tree has no R vertex");
  auto walk = t.contour(start, t.rotation(start).front());
  std::vector<int> first(at(d), -1);
  std::vector<int> match(at(d), -1);
  for (int j = 0; j < 2 * d; ++j) {
    int e = walk[at(j)].edge;
    if (first[at(e)] < 0) {
      first[at(e)] = j;
      continue;
    }
    int i = first[at(e)];
    int xpos = i % 2 == 0 ? i : j;
    int ypos = i % 2 == 0 ? j : i;
    match[at(xpos / 2)] = (ypos - 1) / 2;
  }
  return build_portrait(make_collection(d, image, std::move(match)));
}

CensusReport census_crosscheck(int d) { return census_crosscheck(d, default_image(d)); }

CensusReport census_crosscheck(int d, const Chord& image) {
  CensusReport r;
  r.d = d;
  auto all = noncrossing_matchings(d);
  r.total = static_cast<long>(all.size());
  r.catalan = static_cast<long>(catalan(d));
  auto reps = matching_classes(d);
  r.classes = static_cast<long>(reps.size());
  r.burnside = burnside_matching_count(d);
  r.formula = static_cast<long>(count_formula(d));
  auto trees = enumerate_trees(d);
  r.trees = static_cast<long>(trees.size());
  std::set<CanonicalCode> duals;
  for (const auto& m : reps) {
    auto p = build_portrait(make_collection(d, image, m));
    if (central_strip(p)) ++r.with_strip;
    duals.insert(canonical_code(dual_tree(p)));
  }
  r.duals_match = duals == std::set<CanonicalCode>(trees.begin(), trees.end());
  r.ok = r.total == r.catalan && r.classes == r.formula && r.burnside == r.formula && r.trees == r.formula &&
         r.with_strip == r.formula - 1 && r.duals_match;
  return r;
}

}  // namespace lamkit
