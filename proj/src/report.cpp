#include "lamkit/report.hpp"

#include <sstream>

namespace lamkit {

namespace {

Json kind_json(RegionKind k) { return std::string(1, kind_char(k)); }

Json arc_json(const Arc& a) {
  return Json{{"index", a.index}, {"start", to_json(a.start)}, {"end", to_json(a.end)}, {"length", to_json(a.length)}};
}

Json critical_json(const CriticalChord& c) {
  return Json{{"chord", to_json(c.chord)}, {"displacement", c.displacement}};
}

Json vertices_json(const std::vector<Angle>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }
Json to_json(const Angle& a) { return a.str(); }
Json to_json(const Chord& c) { return c.str(); }

Json tree_json(const PlaneBicoloredTree& t) {
  Json colors = Json::array();
  for (auto c : t.colors()) colors.push_back(kind_json(c));
  Json edges = Json::array();
  for (const auto& e : t.edges()) edges.push_back(Json::array({e[0], e[1]}));
  Json rotation = Json::array();
  for (std::size_t v = 0; v < t.vertex_count(); ++v) rotation.push_back(t.rotation(static_cast<int>(v)));
  return Json{{"parent", t.parents()},
              {"colors", colors},
              {"edges", edges},
              {"rotation", rotation},
              {"canonical_code", canonical_code(t).str()}};
}

Json portrait_json(const SiblingPortrait& p) {
  const auto& c = p.collection;
  Json leaves = Json::array();
  for (std::size_t i = 0; i < c.leaves.size(); ++i) {
    leaves.push_back(Json{{"id", i},
                          {"chord", to_json(c.leaves[i])},
                          {"length", to_json(leaf_length(c.leaves[i]))},
                          {"regions", Json::array({p.leaf_regions[i][0], p.leaf_regions[i][1]})}});
  }
  Json regions = Json::array();
  for (std::size_t i = 0; i < p.regions.size(); ++i) {
    const auto& r = p.regions[i];
    Json arcs = Json::array();
    for (const auto& a : r.arcs) arcs.push_back(arc_json(a));
    regions.push_back(Json{{"id", i}, {"kind", kind_json(r.kind)}, {"degree", r.degree}, {"arcs", arcs}, {"leaves", r.leaves}});
  }
  Json strip = nullptr;
  if (auto s = central_strip(p)) {
    strip = Json{{"components", s->components},
                 {"degree", s->degree},
                 {"eta", to_json(s->eta)},
                 {"boundary_leaves", s->boundary_leaves}};
  }
  return Json{{"d", c.d},
              {"image", to_json(c.image)},
              {"short_arc", to_json(c.short_arc())},
              {"long_arc", to_json(c.long_arc())},
              {"match", c.match},
              {"points", vertices_json(c.points)},
              {"leaves", leaves},
              {"regions", regions},
              {"central_strip", strip},
              {"tree", tree_json(dual_tree(p))}};
}

Json census_json(const CensusReport& r) {
  return Json{{"d", r.d},           {"total", r.total},       {"catalan", r.catalan},
              {"classes", r.classes}, {"burnside", r.burnside}, {"formula", r.formula},
              {"trees", r.trees},     {"with_strip", r.with_strip}, {"duals_match", r.duals_match},
              {"ok", r.ok}};
}

std::string census_text(const std::vector<CensusReport>& rows) {
  std::ostringstream out;
  out << "d  catalan  N(d)  with-strip  ok\n";
  for (const auto& r : rows) {
    out << r.d << "  " << r.catalan << "  " << r.formula << "  " << r.with_strip << "  " << (r.ok ? "yes" : "NO") << "\n";
  }
  return out.str();
}

Json tau_json(int d, const std::vector<Rational>& xs) {
  Json values = Json::array();
  for (const auto& x : xs) values.push_back(Json{{"x", to_json(x)}, {"tau", to_json(tau(d, x))}});
  Json fixed = Json::array();
  for (const auto& f : tau_fixed_points(d)) fixed.push_back(to_json(f));
  return Json{{"d", d}, {"values", values}, {"fixed_points", fixed}};
}

Json csl_json(const CSLReport& r) {
  Json leaves = Json::array();
  for (const auto& l : r.leaves) {
    Json reentries = Json::array();
    for (const auto& e : l.reentries) {
      reentries.push_back(Json{{"j", e.j},
                               {"chord", to_json(e.chord)},
                               {"components", e.components},
                               {"same_component", e.same_component},
                               {"first", e.first}});
    }
    Json witnesses = Json::array();
    for (const auto& w : l.witnesses) {
      witnesses.push_back(Json{{"j", w.j},
                               {"k", w.k},
                               {"leaf_k", to_json(w.leaf_k)},
                               {"D", critical_json(w.D)},
                               {"bound", to_json(w.bound)},
                               {"achieved", to_json(w.achieved)},
                               {"outside_strip", w.outside_strip},
                               {"valid", w.valid},
                               {"first", w.first}});
    }
    leaves.push_back(Json{{"leaf", l.leaf},
                          {"chord", to_json(l.chord)},
                          {"verdict", verdict_name(l.verdict)},
                          {"part1", l.part1},
                          {"part2", l.part2},
                          {"part3", l.part3},
                          {"iterations", l.iterations},
                          {"cycled", l.cycled},
                          {"touch_only", l.touch_only},
                          {"degenerate", l.degenerate},
                          {"reentries", reentries},
                          {"witnesses", witnesses}});
  }
  Json strip = nullptr;
  if (r.strip) {
    strip = Json{{"components", r.strip->components}, {"degree", r.strip->degree}, {"boundary_leaves", r.strip->boundary_leaves}};
  }
  return Json{{"d", r.d},
              {"image", to_json(r.image)},
              {"match", r.match},
              {"verdict", verdict_name(r.verdict)},
              {"reason", r.reason},
              {"strip", strip},
              {"eta", to_json(r.eta)},
              {"long_arc", to_json(r.long_arc)},
              {"eta_bound", r.eta_bound},
              {"image_length", r.image_length},
              {"leaves", leaves}};
}

Json unicritical_json(const UnicriticalReport& r) {
  return Json{{"verdict", verdict_name(r.verdict)},
              {"reason", r.reason},
              {"same_component_reentries", r.same_component_reentries},
              {"csl", csl_json(r.csl)}};
}

Json sweep_json(const SweepConfig& cfg, const SweepResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(csl_json(f));
  const bool pass = r.part1_violations == 0 && r.part2_violations == 0 && r.first_witnessed == r.first_same_component &&
                    r.eta_bound_violations == 0;
  return Json{{"d", r.d},
              {"config",
               Json{{"denominator_max", cfg.denominator_max},
                    {"exhaustive_max", cfg.exhaustive_max},
                    {"samples", cfg.samples},
                    {"seed", cfg.seed},
                    {"max_iters", cfg.max_iters}}},
              {"status", r.complete ? "COMPLETE" : "INCOMPLETE"},
              {"verdict", pass ? "PASS" : "FAIL"},
              {"images", r.images},
              {"compatible_images", r.compatible_images},
              {"collections", r.collections},
              {"leaves", r.leaves},
              {"part1_violations", r.part1_violations},
              {"part2_violations", r.part2_violations},
              {"first_same_component", r.first_same_component},
              {"first_witnessed", r.first_witnessed},
              {"later_same_component", r.later_same_component},
              {"later_witnessed", r.later_witnessed},
              {"touch_only", r.touch_only},
              {"truncated", r.truncated},
              {"eta_bound_violations", r.eta_bound_violations},
              {"failures", failures}};
}

Json orbit_json(const PolygonOrbit& o) {
  Json verts = Json::array();
  for (const auto& a : o.base()) {
    verts.push_back(Json{{"angle", to_json(a)}, {"itinerary", eventual_itinerary(o.d, a).str()}});
  }
  Json iterates = Json::array();
  for (std::size_t t = 0; t < o.images.size(); ++t) {
    Json lengths = Json::array();
    for (std::size_t j = 0; j < o.images[t].size(); ++j) lengths.push_back(to_json(leaf_length(o.side(t, j))));
    iterates.push_back(Json{{"t", t},
                            {"vertices", vertices_json(o.images[t])},
                            {"side_lengths", lengths},
                            {"order_preserved", o.order_preserved[t]}});
  }
  return Json{{"d", o.d},
              {"p", o.period},
              {"k", o.base().size()},
              {"vertices", verts},
              {"iterates", iterates},
              {"identity_return", o.verdict.is_identity_return},
              {"reason", reason_name(o.verdict.reason)},
              {"detail", o.verdict.detail}};
}

Json orbit_json(const PolygonOrbit& o, const Sigma3Analysis& a) {
  Json j = orbit_json(o);
  Json approaches = Json::array();
  for (const auto& ap : a.approaches) {
    approaches.push_back(Json{{"t", ap.t},
                              {"sides", Json::array({ap.a, ap.b})},
                              {"case", case_name(ap.kind)},
                              {"longest", ap.longest},
                              {"other", ap.other ? Json(*ap.other) : Json(nullptr)},
                              {"successor_rule", ap.successor_rule}});
  }
  Json pairs = Json::array();
  for (const auto& e : a.equal_pairs) {
    pairs.push_back(Json{{"sides", Json::array({e.a, e.b})},
                         {"near_iterates", e.near_iterates},
                         {"unique", e.unique},
                         {"straddles", e.straddles}});
  }
  Json near = Json::array();
  for (const auto& s : a.sides) near.push_back(s.near_critical ? Json(*s.near_critical) : Json(nullptr));
  j["analysis"] = Json{{"no_fixed_lengths", a.no_fixed_lengths},
                       {"close_to_critical", a.close_to_critical},
                       {"first_near_iterate", near},
                       {"equal_pairs", pairs},
                       {"approaches", approaches},
                       {"thinpoly", a.thinpoly},
                       {"longest_rule", a.longest_rule},
                       {"ok", a.ok}};
  return j;
}

Json search_json(const SearchLimits& limits, const SearchResult& r) {
  Json orbits = Json::array();
  for (const auto& P : r.orbits) {
    auto o = polygon_orbit(r.d, P, r.p);
    orbits.push_back(r.d == 3 && P.size() >= 3 ? orbit_json(o, analyze_orbit_sigma3(o)) : orbit_json(o));
  }
  return Json{{"d", r.d},
              {"k", r.k},
              {"p", r.p},
              {"limits", Json{{"max_points", limits.max_points}, {"node_budget", limits.node_budget}}},
              {"status", r.complete ? "COMPLETE" : "INCOMPLETE"},
              {"nodes", r.nodes},
              {"rejected", r.rejected},
              {"count", r.orbits.size()},
              {"orbits", orbits}};
}

Json quadrilateral_json(const QuadrilateralCheck& q) {
  Json dist = Json::array();
  for (const auto& x : q.side_distance) dist.push_back(to_json(x));
  return Json{{"identity_return", q.verdict.is_identity_return},
              {"reason", reason_name(q.verdict.reason)},
              {"side", to_json(sigma4_special_side())},
              {"side_distance", dist},
              {"min_distance", to_json(q.min_distance)},
              {"stays_far", q.stays_far}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lamkit
