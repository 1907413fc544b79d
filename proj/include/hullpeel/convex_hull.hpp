#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

namespace detail {

inline bool xy_less(const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

// Monotone chain over points already sorted by (x, y). Returns the hull in
// clockwise order starting at the lexicographically smallest point. Any
// collinear triple met on the way is reported rather than silently dropped.
inline std::vector<Point> hull_of_sorted(std::span<const Point> s) {
  const std::size_t n = s.size();
  if (n <= 2) return {s.begin(), s.end()};
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  auto push = [&](const Point& p, std::size_t floor) {
    while (k >= floor + 2) {
      const int turn = orientation_sign(h[k - 2], h[k - 1], p);
      if (turn == 0) throw DegenerateInput("convex hull: collinear points");
      if (turn < 0) break;  // clockwise turn keeps the upper-first CW chain convex
      --k;
    }
    h[k++] = p;
  };
  // Upper chain left to right, then lower chain right to left: clockwise.
  for (std::size_t i = 0; i < n; ++i) push(s[i], 0);
  const std::size_t upper = k - 1;
  for (std::size_t i = n - 1; i-- > 0;) push(s[i], upper);
  h.resize(k - 1);
  return h;
}

}  // namespace detail

// Clockwise convex hull, O(n log n). Requires general position.
inline std::vector<Point> convex_hull(std::span<const Point> points) {
  if (points.size() < 3) throw TooFewPoints(points.size());
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), detail::xy_less);
  return detail::hull_of_sorted(sorted);
}

struct LayerSet {
  std::vector<std::vector<Point>> layers;  // outermost first, each clockwise
  std::vector<int> layer_of;               // 1-based layer per id, 0 if absent

  int layer(PointId id) const { return id < layer_of.size() ? layer_of[id] : 0; }
  std::size_t depth() const { return layers.size(); }
};

// Onion decomposition by repeated hull extraction over one presorted list,
// O(n * layers). The innermost layer may hold one or two points. With
// max_layers set, only the outermost layers are extracted.
inline LayerSet convex_layers(std::span<const Point> points, std::size_t max_layers = static_cast<std::size_t>(-1)) {
  LayerSet out;
  if (points.empty()) return out;
  std::vector<Point> rest(points.begin(), points.end());
  std::sort(rest.begin(), rest.end(), detail::xy_less);
  PointId max_id = 0;
  for (const Point& p : rest) max_id = std::max(max_id, p.id);
  out.layer_of.assign(static_cast<std::size_t>(max_id) + 1, 0);
  while (!rest.empty() && out.layers.size() < max_layers) {
    std::vector<Point> layer = detail::hull_of_sorted(rest);
    const int index = static_cast<int>(out.layers.size()) + 1;
    for (const Point& p : layer) out.layer_of[p.id] = index;
    std::erase_if(rest, [&](const Point& p) { return out.layer_of[p.id] != 0; });
    out.layers.push_back(std::move(layer));
  }
  return out;
}

}  // namespace hullpeel
