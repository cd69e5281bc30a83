#include "packkit/svg_render.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace packkit {

namespace {

// Fixed palette, keyed by class index modulo 16.
const char* const kPalette[16] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#aec7e8",
    "#ffbb78", "#98df8a", "#d62728", "#c5b0d5"};

constexpr double kScale = 600.0;  // strip width in SVG units
constexpr double kMargin = 10.0;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

}  // namespace

std::string render_svg_string(const Instance& instance, const StripPacking& packing,
                              const Decor* decor) {
  std::unordered_map<int, const Rect*> rect_by_id;
  for (const Rect& r : instance.rects) rect_by_id[r.id] = &r;

  const double strip_h = packing.height;
  const double width = kScale + 2 * kMargin;
  const double height = strip_h * kScale + 2 * kMargin;
  // SVG y points down; flip so the strip grows upward from the bottom edge.
  auto sx = [](double x) { return kMargin + x * kScale; };
  auto sy = [&](double y_top) { return kMargin + (strip_h - y_top) * kScale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  svg << "<rect class=\"strip\" x=\"" << num(sx(0)) << "\" y=\"" << num(sy(strip_h))
      << "\" width=\"" << num(kScale) << "\" height=\"" << num(strip_h * kScale)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  for (const Placement& p : packing.placements) {
    auto it = rect_by_id.find(p.rect_id);
    if (it == rect_by_id.end()) continue;
    const Rect& r = *it->second;
    int cls = r.id;
    if (decor) {
      auto c = decor->rect_class.find(r.id);
      if (c != decor->rect_class.end()) cls = c->second;
    }
    const char* color = kPalette[((cls % 16) + 16) % 16];
    svg << "<rect class=\"item\" x=\"" << num(sx(p.x)) << "\" y=\"" << num(sy(p.y + r.h))
        << "\" width=\"" << num(r.w * kScale) << "\" height=\"" << num(r.h * kScale)
        << "\" fill=\"" << color << "\" fill-opacity=\"0.8\" stroke=\"#333333\" "
        << "stroke-width=\"0.5\"/>\n";
  }

  if (decor) {
    for (const Decor::Box& b : decor->slips) {
      svg << "<rect class=\"slip\" x=\"" << num(sx(b.x)) << "\" y=\"" << num(sy(b.y + b.h))
          << "\" width=\"" << num(b.w * kScale) << "\" height=\"" << num(b.h * kScale)
          << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"0.8\" "
          << "stroke-dasharray=\"6 3\"/>\n";
    }
    for (double y : decor->lines) {
      svg << "<line class=\"band\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(y)) << "\" x2=\""
          << num(sx(1)) << "\" y2=\"" << num(sy(y))
          << "\" stroke=\"#888888\" stroke-width=\"0.8\" stroke-dasharray=\"2 2\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_svg(const Instance& instance, const StripPacking& packing, const std::string& path,
                const Decor* decor) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render_svg_string(instance, packing, decor);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace packkit
