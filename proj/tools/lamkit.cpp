// lamkit command line. Exit codes: 0 all expected verdicts hold, 1 a check
// failed, 2 usage error, 3 a bounded search ran out of budget.

#include <CLI11.hpp>

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lamkit/census.hpp"
#include "lamkit/polygon.hpp"
#include "lamkit/render.hpp"
#include "lamkit/report.hpp"
#include "lamkit/strip.hpp"

using namespace lamkit;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIncomplete = 3 };

struct Global {
  bool deterministic = false;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
};

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

Json envelope(const Global& g, const std::string& command, Json report) {
  Json j{{"schema_version", kSchemaVersion}, {"command", command}};
  if (!g.deterministic) j["generated_at"] = timestamp();
  j["report"] = std::move(report);
  return j;
}

// JSON goes through the envelope; text is printed as given.
void emit_report(const Global& g, const std::string& command, Json report, const std::string& text) {
  emit(g, g.format == "text" ? text : dump(envelope(g, command, std::move(report))));
}

std::vector<Angle> parse_angles(const std::vector<std::string>& raw) {
  std::vector<Angle> out;
  for (const auto& s : raw) out.push_back(parse_angle(s));
  return out;
}

// ---- tau

struct TauArgs {
  int d = 2;
  std::vector<std::string> xs;
  bool fixed = false;
  bool plot = false;
  int samples = 0;
};

int run_tau(const Global& g, const TauArgs& a) {
  if (a.plot) {
    emit(g, render_tau(a.d, a.samples));
    return kOk;
  }
  auto fixed = tau_fixed_points(a.d);
  std::vector<Rational> xs;
  for (const auto& s : a.xs) xs.push_back(parse_rational(s));
  std::string text;
  if (a.fixed || xs.empty()) {
    for (std::size_t i = 0; i < fixed.size(); ++i) text += (i ? ", " : "") + format_rational(fixed[i]);
    text += "\n";
  }
  for (const auto& x : xs) {
    Rational y = tau(a.d, x);
    text += format_rational(y);
    if (y == x) text += " (fixed)";
    text += "\n";
  }
  emit_report(g, "tau", tau_json(a.d, xs), text);
  return kOk;
}

// ---- portraits

struct PortraitArgs {
  int d = 2;
  std::string image;
  bool enumerate = false;
  bool census = false;
  std::string svg_dir;
};

int run_census_rows(const Global& g, const std::string& command, const std::vector<int>& ds, const Chord* image) {
  std::vector<CensusReport> rows;
  Json arr = Json::array();
  bool ok = true;
  for (int d : ds) {
    rows.push_back(image ? census_crosscheck(d, *image) : census_crosscheck(d));
    arr.push_back(census_json(rows.back()));
    ok = ok && rows.back().ok;
  }
  emit_report(g, command, Json{{"rows", arr}, {"verdict", ok ? "PASS" : "FAIL"}}, census_text(rows));
  return ok ? kOk : kFailed;
}

int run_portraits(const Global& g, const PortraitArgs& a) {
  Chord image = a.image.empty() ? default_image(a.d) : parse_chord(a.image);
  try {
    oriented_image(image);
  } catch (const DiameterImageError& e) {
    std::cerr << "refusing diameter image " << image.str() << ": " << e.what() << "\n";
    return kUsage;
  }
  if (a.census) return run_census_rows(g, "portraits", {a.d}, &image);

  auto colls = enumerate_sibling_collections(a.d, image);
  Json portraits = Json::array();
  std::string text;
  int with_strip = 0;
  for (std::size_t i = 0; i < colls.size(); ++i) {
    auto p = build_portrait(colls[i]);
    bool strip = central_strip(p).has_value();
    with_strip += strip ? 1 : 0;
    portraits.push_back(portrait_json(p));
    text += "match";
    for (int m : colls[i].match) text += " " + std::to_string(m);
    text += strip ? "  strip\n" : "  no strip\n";
    if (!a.svg_dir.empty()) {
      std::filesystem::create_directories(a.svg_dir);
      write_file(std::filesystem::path(a.svg_dir) / ("portrait_" + std::to_string(i) + ".svg"), render_portrait(p));
    }
  }
  text = std::to_string(colls.size()) + " collections, " + std::to_string(with_strip) + " with a central strip\n" + text;
  emit_report(g, "portraits",
              Json{{"d", a.d}, {"image", to_json(image)}, {"count", colls.size()}, {"with_strip", with_strip},
                   {"portraits", portraits}},
              text);
  return kOk;
}

// ---- strip-verify

struct StripArgs {
  int d = 2;
  SweepConfig cfg;
  std::string image;
  std::vector<int> match;
  bool unicritical = false;
};

int run_strip(const Global& g, StripArgs a) {
  a.cfg.d = a.d;
  a.cfg.seed = g.seed;
  if (!a.image.empty()) {
    Chord image = parse_chord(a.image);
    std::vector<SiblingCollection> colls;
    if (a.match.empty()) {
      colls = enumerate_sibling_collections(a.d, image);
    } else {
      colls.push_back(make_collection(a.d, image, a.match));
    }
    Json reports = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& c : colls) {
      if (a.unicritical) {
        auto u = verify_unicritical(c, a.cfg.max_iters);
        ok = ok && u.verdict != Verdict::FAIL;
        reports.push_back(unicritical_json(u));
        text += verdict_name(u.verdict) + "  " + u.reason + "\n";
      } else {
        auto r = verify_csl(c, a.cfg.max_iters);
        ok = ok && r.verdict != Verdict::FAIL;
        reports.push_back(csl_json(r));
        text += verdict_name(r.verdict) + "  " + r.reason + "\n";
      }
    }
    emit_report(g, "strip-verify", Json{{"reports", reports}, {"verdict", ok ? "PASS" : "FAIL"}}, text);
    return ok ? kOk : kFailed;
  }
  auto r = csl_sweep(a.cfg);
  Json j = sweep_json(a.cfg, r);
  const bool pass = j["verdict"] == "PASS";
  std::string text = "d=" + std::to_string(r.d) + " images=" + std::to_string(r.images) +
                     " collections=" + std::to_string(r.collections) + " leaves=" + std::to_string(r.leaves) +
                     "\npart1 violations " + std::to_string(r.part1_violations) + ", part2 violations " +
                     std::to_string(r.part2_violations) + ", same-component reentries " +
                     std::to_string(r.first_same_component) + " (witnessed " + std::to_string(r.first_witnessed) +
                     ")\n" + (pass ? "PASS" : "FAIL") + (r.complete ? " (COMPLETE)\n" : " (INCOMPLETE)\n");
  emit_report(g, "strip-verify", std::move(j), text);
  if (!r.complete) return kIncomplete;
  return pass ? kOk : kFailed;
}

// ---- irp

struct IrpArgs {
  int d = 3;
  int k = 3;
  int p = 1;
  std::vector<std::string> vertices;
  SearchLimits limits;
};

std::string orbit_text(const PolygonOrbit& o) {
  std::string t = make_polygon(o.base()).str() + " period " + std::to_string(o.period) + ": ";
  t += o.verdict.is_identity_return ? "identity-return" : reason_name(o.verdict.reason) + " (" + o.verdict.detail + ")";
  return t + "\n";
}

Json orbit_report(const PolygonOrbit& o) {
  if (o.d == 3 && o.verdict.is_identity_return && o.base().size() >= 3) return orbit_json(o, analyze_orbit_sigma3(o));
  return orbit_json(o);
}

int run_irp_search(const Global& g, const IrpArgs& a) {
  auto r = search_irp(a.d, a.k, a.p, a.limits);
  std::string text = std::to_string(r.orbits.size()) + " orbits found (" + (r.complete ? "complete" : "INCOMPLETE") + ")\n";
  for (const auto& P : r.orbits) text += orbit_text(polygon_orbit(a.d, P, a.p));
  emit_report(g, "irp search", search_json(a.limits, r), text);
  if (!r.complete) return kIncomplete;
  return r.rejected == 0 ? kOk : kFailed;
}

int run_irp_verify(const Global& g, const IrpArgs& a) {
  auto P = make_polygon(parse_angles(a.vertices));
  auto o = polygon_orbit(a.d, P, a.p);
  emit_report(g, "irp verify", orbit_report(o), orbit_text(o));
  return o.verdict.is_identity_return ? kOk : kFailed;
}

int run_irp_examples(const Global& g, const IrpArgs& a) {
  if (a.d < 3) throw CLI::ValidationError("irp examples", "d must be at least 3");
  Json list = Json::array();
  std::string text;
  bool ok = true;
  auto add = [&](const std::string& name, const Polygon& P, int p) {
    auto o = polygon_orbit(a.d, P, p);
    Json j = orbit_report(o);
    list.push_back(Json{{"name", name}, {"orbit", j}});
    text += name + " " + orbit_text(o);
    ok = ok && o.verdict.is_identity_return;
  };
  add("period-3 " + std::to_string(a.d) + "-gon", example_period3(a.d), 3);
  add("period-2 " + std::to_string(a.d - 1) + "-gon", example_period2(a.d), 2);
  Json report{{"d", a.d}, {"examples", list}};
  if (a.d == 4) {
    auto q = check_sigma4_quadrilateral();
    report["quadrilateral"] = quadrilateral_json(q);
    text += "quadrilateral " + example_sigma4_quadrilateral().str() + ": " +
            (q.verdict.is_identity_return ? "identity-return" : reason_name(q.verdict.reason)) +
            ", side distance min " + format_rational(q.min_distance) + "\n";
    ok = ok && q.verdict.is_identity_return && q.stays_far;
  }
  report["verdict"] = ok ? "PASS" : "FAIL";
  emit_report(g, "irp examples", std::move(report), text);
  return ok ? kOk : kFailed;
}

// ---- render

struct RenderArgs {
  int d = 2;
  int p = 1;
  std::string image;
  std::vector<int> match;
  std::vector<std::string> vertices;
  std::string dyck;
  int samples = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dynamics of angle multiplication on the circle"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--deterministic", g.deterministic, "omit the timestamp so reruns are byte-identical");
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "seed for sampled sweeps");

  int code = kOk;
  auto guard = [&](auto fn) {
    return [&, fn]() { code = fn(); };
  };

  TauArgs tau_args;
  auto* tau_cmd = app.add_subcommand("tau", "leaf length function tau_d");
  tau_cmd->add_option("d", tau_args.d)->required()->check(CLI::Range(2, 1000));
  tau_cmd->add_option("x", tau_args.xs, "lengths in [0, 1/2] as num/den");
  tau_cmd->add_flag("--fixed", tau_args.fixed, "list the fixed points");
  tau_cmd->add_flag("--plot", tau_args.plot, "emit an SVG graph");
  tau_cmd->add_option("--samples", tau_args.samples, "extra plot points per unit");
  tau_cmd->callback(guard([&] { return run_tau(g, tau_args); }));

  PortraitArgs por_args;
  auto* por_cmd = app.add_subcommand("portraits", "sibling collections over an image leaf");
  por_cmd->add_option("d", por_args.d)->required()->check(CLI::Range(2, 12));
  por_cmd->add_option("image", por_args.image, "image leaf a-b (default 1/(8d)-3/(8d))");
  auto* en = por_cmd->add_flag("--enumerate", por_args.enumerate, "list every collection (default)");
  por_cmd->add_flag("--census", por_args.census, "rotation-class census")->excludes(en);
  por_cmd->add_option("--svg-dir", por_args.svg_dir, "write one SVG per portrait here");
  por_cmd->callback(guard([&] { return run_portraits(g, por_args); }));

  int census_min = 2;
  int census_max = 7;
  auto* census_cmd = app.add_subcommand("census", "counting cross-check for a range of degrees");
  census_cmd->add_option("--d-min", census_min)->check(CLI::Range(2, 12));
  census_cmd->add_option("--d-max", census_max)->check(CLI::Range(2, 12));
  census_cmd->callback(guard([&] {
    std::vector<int> ds;
    for (int d = census_min; d <= census_max; ++d) ds.push_back(d);
    return run_census_rows(g, "census", ds, nullptr);
  }));

  StripArgs strip_args;
  auto* strip_cmd = app.add_subcommand("strip-verify", "central strip lemma on leaf orbits");
  strip_cmd->add_option("d", strip_args.d)->required()->check(CLI::Range(2, 8));
  strip_cmd->add_option("--denominator-max", strip_args.cfg.denominator_max)->check(CLI::Range(2, 100000));
  strip_cmd->add_option("--exhaustive-max", strip_args.cfg.exhaustive_max, "denominators checked exhaustively");
  strip_cmd->add_option("--samples", strip_args.cfg.samples, "sampled images above --exhaustive-max");
  strip_cmd->add_option("--max-iters", strip_args.cfg.max_iters);
  strip_cmd->add_option("--image", strip_args.image, "check the collections over one image leaf a-b");
  strip_cmd->add_option("--match", strip_args.match, "restrict to one matching, e.g. 2,0,1")->delimiter(',');
  strip_cmd->add_flag("--unicritical", strip_args.unicritical, "also apply the unicritical corollary");
  strip_cmd->callback(guard([&] { return run_strip(g, strip_args); }));

  IrpArgs irp_args;
  auto* irp = app.add_subcommand("irp", "identity-return polygons");
  irp->require_subcommand(1);
  auto* search = irp->add_subcommand("search", "all identity-return k-gons of period p");
  search->add_option("d", irp_args.d)->required()->check(CLI::Range(2, 64));
  search->add_option("k", irp_args.k)->required()->check(CLI::Range(2, 64));
  search->add_option("p", irp_args.p)->required()->check(CLI::Range(1, 64));
  search->add_option("--max-points", irp_args.limits.max_points, "bound on d^p - 1");
  search->add_option("--node-budget", irp_args.limits.node_budget, "search nodes before giving up");
  search->callback(guard([&] { return run_irp_search(g, irp_args); }));
  auto* verify = irp->add_subcommand("verify", "check one polygon");
  verify->add_option("d", irp_args.d)->required()->check(CLI::Range(2, 64));
  verify->add_option("p", irp_args.p)->required()->check(CLI::Range(1, 1000));
  verify->add_option("vertices", irp_args.vertices)->required();
  verify->callback(guard([&] { return run_irp_verify(g, irp_args); }));
  auto* examples = irp->add_subcommand("examples", "the known families for degree d");
  examples->add_option("d", irp_args.d)->required()->check(CLI::Range(3, 64));
  examples->callback(guard([&] { return run_irp_examples(g, irp_args); }));

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "SVG figures");
  render->require_subcommand(1);
  auto* r_por = render->add_subcommand("portrait", "one sibling portrait");
  r_por->add_option("d", ren.d)->required()->check(CLI::Range(2, 12));
  r_por->add_option("image", ren.image)->required();
  r_por->add_option("--match", ren.match)->required()->delimiter(',');
  r_por->callback(guard([&] {
    emit(g, render_portrait(build_portrait(make_collection(ren.d, parse_chord(ren.image), ren.match))));
    return kOk;
  }));
  auto* r_tau = render->add_subcommand("tau", "graph of tau_d");
  r_tau->add_option("d", ren.d)->required()->check(CLI::Range(2, 1000));
  r_tau->add_option("--samples", ren.samples);
  r_tau->callback(guard([&] {
    emit(g, render_tau(ren.d, ren.samples));
    return kOk;
  }));
  auto* r_orbit = render->add_subcommand("orbit", "a polygon and its images");
  r_orbit->add_option("d", ren.d)->required()->check(CLI::Range(2, 64));
  r_orbit->add_option("p", ren.p)->required()->check(CLI::Range(1, 1000));
  r_orbit->add_option("vertices", ren.vertices)->required();
  r_orbit->callback(guard([&] {
    emit(g, render_orbit(polygon_orbit(ren.d, make_polygon(parse_angles(ren.vertices)), ren.p)));
    return kOk;
  }));
  auto* r_tree = render->add_subcommand("tree", "plane bicolored tree from a Dyck word");
  r_tree->add_option("dyck", ren.dyck)->required();
  r_tree->callback(guard([&] {
    emit(g, render_tree(tree_from_dyck(ren.dyck, RegionKind::R)));
    return kOk;
  }));

  for (auto* sub : {tau_cmd, por_cmd, census_cmd, strip_cmd, irp, search, verify, examples, render, r_por, r_tau,
                    r_orbit, r_tree}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return code;
}
