#include "lamkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "lamkit/strip.hpp"

namespace lamkit {

namespace {

constexpr const char* kFillC = "#dbe8f5";
constexpr const char* kFillR = "#f7e4cc";
constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                    "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

struct Disk {
  double cx;
  double cy;
  double r;

  double x(const Angle& a) const {
    return cx + r * std::cos(2 * std::numbers::pi * static_cast<double>(a.value()));
  }
  double y(const Angle& a) const {
    return cy - r * std::sin(2 * std::numbers::pi * static_cast<double>(a.value()));
  }
  std::string pt(const Angle& a) const { return fmt_coord(x(a)) + " " + fmt_coord(y(a)); }
};

Disk disk(const RenderOptions& o) {
  double h = o.size / 2.0;
  return {h, h, h - o.margin};
}

std::string circle(const Disk& k) {
  return "<circle class=\"boundary\" cx=\"" + fmt_coord(k.cx) + "\" cy=\"" + fmt_coord(k.cy) + "\" r=\"" +
         fmt_coord(k.r) + "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>";
}

std::string line(const std::string& cls, double x1, double y1, double x2, double y2, const std::string& style) {
  return "<line class=\"" + cls + "\" x1=\"" + fmt_coord(x1) + "\" y1=\"" + fmt_coord(y1) + "\" x2=\"" + fmt_coord(x2) +
         "\" y2=\"" + fmt_coord(y2) + "\" " + style + "/>";
}

std::string text(double x, double y, const std::string& s, int size = 11) {
  return "<text x=\"" + fmt_coord(x) + "\" y=\"" + fmt_coord(y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"middle\">" + s + "</text>";
}

// Closed boundary: ccw along each arc, then straight along the leaf to the
// next arc.
std::string region_path(const Disk& k, const Region& r) {
  std::string d;
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    const Arc& a = r.arcs[i];
    d += (i == 0 ? "M " : " L ") + k.pt(a.start);
    if (a.length > 0) {
      d += " A " + fmt_coord(k.r) + " " + fmt_coord(k.r) + " 0 " + (a.length > Rational(1, 2) ? "1" : "0") + " 0 " +
           k.pt(a.end);
    }
  }
  return d + " Z";
}

void label_points(Scene& s, const Disk& k, const std::vector<Angle>& pts) {
  std::set<Angle> seen;
  for (const auto& a : pts) {
    if (!seen.insert(a).second) continue;
    Disk outer{k.cx, k.cy, k.r + 18};
    s.add(text(outer.x(a), outer.y(a) + 4, a.str(), 10));
  }
}

}  // namespace

std::string fmt_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
  return out;
}

std::string Scene::svg() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_) +
         "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
         std::to_string(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (const auto& e : elements_) out += e + "\n";
  return out + "</svg>\n";
}

std::string render_portrait(const SiblingPortrait& p, const RenderOptions& opts) {
  Scene s(opts.size, opts.size);
  Disk k = disk(opts);
  for (const auto& r : p.regions) {
    bool c = r.kind == RegionKind::C;
    s.add(std::string("<path class=\"region ") + (c ? "C" : "R") + "\" d=\"" + region_path(k, r) + "\" fill=\"" +
          (c ? kFillC : kFillR) + "\" stroke=\"none\"/>");
  }
  s.add(circle(k));
  if (auto strip = central_strip(p)) {
    for (int ci : strip->components) {
      s.add("<path class=\"strip\" d=\"" + region_path(k, p.regions[static_cast<std::size_t>(ci)]) +
            "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\"/>");
    }
  }
  for (const auto& l : p.collection.leaves) {
    s.add(line("leaf", k.x(l.a()), k.y(l.a()), k.x(l.b()), k.y(l.b()), "stroke=\"#111111\" stroke-width=\"1.5\""));
  }
  const Chord& im = p.collection.image;
  s.add(line("image", k.x(im.a()), k.y(im.a()), k.x(im.b()), k.y(im.b()),
             "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\""));
  if (opts.labels) label_points(s, k, p.collection.points);
  return s.svg();
}

std::string render_tau(int d, int samples_per_unit, const RenderOptions& opts) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  Scene s(opts.size, opts.size);
  const double m = opts.margin;
  const double side = opts.size - 2 * m;
  // Both axes run over [0, 1/2].
  auto px = [&](const Rational& x) { return m + side * 2 * static_cast<double>(x); };
  auto py = [&](const Rational& y) { return opts.size - m - side * 2 * static_cast<double>(y); };

  std::set<Rational> xs;
  for (int i = 0; i <= d; ++i) xs.insert(Rational(i, 2 * d));
  for (int i = 0; samples_per_unit > 0 && 2 * i <= samples_per_unit; ++i) xs.insert(Rational(i, samples_per_unit));

  const Rational half(1, 2);
  s.add(line("axis", px(0), py(0), px(half), py(0), "stroke=\"#333333\" stroke-width=\"1\""));
  s.add(line("axis", px(0), py(0), px(0), py(half), "stroke=\"#333333\" stroke-width=\"1\""));
  s.add(line("identity", px(0), py(0), px(half), py(half),
             "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\""));
  std::string pts;
  for (const auto& x : xs) {
    if (!pts.empty()) pts += " ";
    pts += fmt_coord(px(x)) + "," + fmt_coord(py(tau(d, x)));
  }
  s.add("<polyline class=\"tau\" points=\"" + pts + "\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"2\"/>");
  for (const auto& f : tau_fixed_points(d)) {
    s.add("<circle class=\"fixed\" cx=\"" + fmt_coord(px(f)) + "\" cy=\"" + fmt_coord(py(f)) +
          "\" r=\"4\" fill=\"#c0392b\"/>");
    if (opts.labels) s.add(text(px(f), py(0) + 16, format_rational(f), 10));
  }
  if (opts.labels) s.add(text(opts.size / 2.0, m / 2, "tau_" + std::to_string(d), 13));
  return s.svg();
}

std::string render_orbit(const PolygonOrbit& o, const RenderOptions& opts) {
  Scene s(opts.size, opts.size);
  Disk k = disk(opts);
  s.add(circle(k));
  std::vector<Angle> all;
  for (std::size_t t = 0; t < o.images.size(); ++t) {
    auto v = o.images[t];
    std::sort(v.begin(), v.end());
    std::string pts;
    for (const auto& a : v) {
      if (!pts.empty()) pts += " ";
      pts += fmt_coord(k.x(a)) + "," + fmt_coord(k.y(a));
      all.push_back(a);
    }
    const char* fill = kPalette[t % std::size(kPalette)];
    s.add("<polygon class=\"iterate\" data-t=\"" + std::to_string(t) + "\" points=\"" + pts + "\" fill=\"" + fill +
          "\" fill-opacity=\"0.55\" stroke=\"" + fill + "\" stroke-width=\"1.5\"/>");
  }
  if (opts.labels) {
    std::sort(all.begin(), all.end());
    label_points(s, k, all);
  }
  return s.svg();
}

std::string render_tree(const PlaneBicoloredTree& t, const RenderOptions& opts) {
  Scene s(opts.size, opts.size);
  const std::size_t n = t.vertex_count();
  if (n == 0) return s.svg();
  std::vector<double> xs(n, 0);
  std::vector<int> depth(n, 0);
  int slots = 0;
  int max_depth = 0;
  // Children of v are the rotation successors of the edge to its parent.
  auto place = [&](auto&& self, int v, int parent_edge) -> void {
    const auto& rot = t.rotation(v);
    std::size_t start = 0;
    if (parent_edge >= 0) start = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), parent_edge) - rot.begin()) + 1;
    std::vector<int> kids;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int e = rot[(start + i) % rot.size()];
      if (e == parent_edge) continue;
      const auto& ed = t.edge(e);
      int w = ed[0] == v ? ed[1] : ed[0];
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      max_depth = std::max(max_depth, depth[static_cast<std::size_t>(w)]);
      self(self, w, e);
      kids.push_back(w);
    }
    if (kids.empty()) {
      xs[static_cast<std::size_t>(v)] = slots++;
    } else {
      xs[static_cast<std::size_t>(v)] =
          (xs[static_cast<std::size_t>(kids.front())] + xs[static_cast<std::size_t>(kids.back())]) / 2;
    }
  };
  place(place, 0, -1);
  const double m = opts.margin;
  const double w = opts.size - 2 * m;
  auto X = [&](int v) { return slots > 1 ? m + w * xs[static_cast<std::size_t>(v)] / (slots - 1) : opts.size / 2.0; };
  auto Y = [&](int v) {
    return max_depth > 0 ? m + w * depth[static_cast<std::size_t>(v)] / max_depth : opts.size / 2.0;
  };
  for (const auto& e : t.edges()) {
    s.add(line("edge", X(e[0]), Y(e[0]), X(e[1]), Y(e[1]), "stroke=\"#333333\" stroke-width=\"2\""));
  }
  for (std::size_t v = 0; v < n; ++v) {
    int vi = static_cast<int>(v);
    bool c = t.color(vi) == RegionKind::C;
    s.add(std::string("<circle class=\"node ") + (c ? "C" : "R") + "\" cx=\"" + fmt_coord(X(vi)) + "\" cy=\"" +
          fmt_coord(Y(vi)) + "\" r=\"12\" fill=\"" + (c ? "#4e79a7" : "#f28e2b") +
          "\" stroke=\"#333333\" stroke-width=\"1\"/>");
    if (opts.labels) s.add(text(X(vi), Y(vi) + 4, c ? "C" : "R", 11));
  }
  return s.svg();
}

}  // namespace lamkit
