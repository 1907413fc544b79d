#pragma once

// SVG 1.1 rendering of a peel: convex layers of the input as closed
// polylines, the region removed by each of the first steps shaded, and the
// peeled points numbered.

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hullpeel/convex_hull.hpp"
#include "hullpeel/peeler.hpp"

namespace hullpeel {

struct SvgOptions {
  double size = 800.0;
  std::size_t max_steps = 50;
  bool draw_points = true;
};

inline std::string render_svg(std::span<const Point> points, const LayerSet& layers,
                              std::span<const PeelEvent> events, const SvgOptions& options = {}) {
  if (points.empty()) throw Error("render_svg: no points");
  double lx = static_cast<double>(points[0].x), hx = lx;
  double ly = static_cast<double>(points[0].y), hy = ly;
  std::unordered_map<PointId, Point> by_id;
  for (const Point& p : points) {
    lx = std::min(lx, static_cast<double>(p.x)), hx = std::max(hx, static_cast<double>(p.x));
    ly = std::min(ly, static_cast<double>(p.y)), hy = std::max(hy, static_cast<double>(p.y));
    by_id.emplace(p.id, p);
  }
  const double margin = 20.0;
  const double span = std::max({hx - lx, hy - ly, 1.0});
  const double scale = (options.size - 2 * margin) / span;
  char buf[128];
  auto coord = [&](const Point& p) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", margin + (static_cast<double>(p.x) - lx) * scale,
                  options.size - margin - (static_cast<double>(p.y) - ly) * scale);
    return std::string(buf);
  };

  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\">\n",
                options.size, options.size);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::size_t steps = std::min(options.max_steps, events.size());
  out += "<g id=\"regions\" fill=\"#e4572e\" fill-opacity=\"0.25\" stroke=\"none\">\n";
  for (std::size_t i = 0; i < steps; ++i) {
    if (events[i].region.size() < 3) continue;
    out += "<polygon points=\"";
    for (PointId id : events[i].region) out += coord(by_id.at(id)) + " ";
    out += "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"layers\" fill=\"none\" stroke=\"#29335c\" stroke-width=\"1\">\n";
  for (const std::vector<Point>& layer : layers.layers) {
    out += "<polyline points=\"";
    for (const Point& p : layer) out += coord(p) + " ";
    out += coord(layer.front()) + "\"/>\n";
  }
  out += "</g>\n";

  if (options.draw_points) {
    out += "<g id=\"points\" fill=\"#555\">\n";
    for (const Point& p : points) {
      const std::string c = coord(p);
      const auto comma = c.find(',');
      out += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"1.5\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g id=\"order\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#e4572e\">\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const std::string c = coord(by_id.at(events[i].peeled.id));
    const auto comma = c.find(',');
    out += "<text x=\"" + c.substr(0, comma) + "\" y=\"" + c.substr(comma + 1) + "\">" +
           std::to_string(events[i].step) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hullpeel
