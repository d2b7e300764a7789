#pragma once

// Standalone SVG 1.1 figures. Angles in turns map to (cos 2πθ, sin 2πθ) and
// every coordinate is printed with six decimals, so identical input gives
// identical bytes.

#include <string>
#include <vector>

#include "lamkit/polygon.hpp"
#include "lamkit/portrait.hpp"
#include "lamkit/tree.hpp"

namespace lamkit {

// Elements are emitted in insertion order.
class Scene {
 public:
  Scene(int width, int height) : width_(width), height_(height) {}

  void add(std::string element) { elements_.push_back(std::move(element)); }
  std::size_t size() const { return elements_.size(); }
  std::string svg() const;

 private:
  int width_;
  int height_;
  std::vector<std::string> elements_;
};

// "%.6f" with negative zero printed as 0.
std::string fmt_coord(double v);

struct RenderOptions {
  int size = 480;
  int margin = 40;
  bool labels = true;
};

// Regions shaded by kind (class "region C" / "region R"), the central strip
// outlined (class "strip"), leaves as straight segments (class "leaf").
std::string render_portrait(const SiblingPortrait& p, const RenderOptions& opts = {});

// Graph of tau_d on [0, 1/2] through every breakpoint i/(2d) plus the
// points k/samples_per_unit, with the diagonal and the fixed points marked.
std::string render_tau(int d, int samples_per_unit = 0, const RenderOptions& opts = {});

// One filled polygon per iterate (class "iterate"), cycling a palette.
std::string render_orbit(const PolygonOrbit& o, const RenderOptions& opts = {});

// Layered drawing from vertex 0; children in rotation order.
std::string render_tree(const PlaneBicoloredTree& t, const RenderOptions& opts = {});

}  // namespace lamkit
