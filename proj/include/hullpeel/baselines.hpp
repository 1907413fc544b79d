#pragma once

// Competing peeling heuristics: remove the point farthest from the mean, or
// remove whole convex layers from the outside in.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hullpeel/convex_hull.hpp"

namespace hullpeel {

enum class DistanceMetric { Euclidean, Squared, Manhattan };

inline std::string_view metric_name(DistanceMetric m) {
  switch (m) {
    case DistanceMetric::Euclidean: return "euclidean";
    case DistanceMetric::Squared: return "squared";
    case DistanceMetric::Manhattan: return "manhattan";
  }
  return "";
}

inline DistanceMetric metric_from_name(std::string_view name) {
  if (name == "euclidean") return DistanceMetric::Euclidean;
  if (name == "squared") return DistanceMetric::Squared;
  if (name == "manhattan") return DistanceMetric::Manhattan;
  throw std::invalid_argument("unknown distance metric '" + std::string(name) + "'");
}

enum class BaselineMethod { DistanceMean, LayerPeel };

struct BaselineTrace {
  std::vector<Point> removed;
  BaselineMethod method = BaselineMethod::DistanceMean;
  std::optional<DistanceMetric> metric;
};

namespace detail {

// Distance from p to the mean S/m, scaled by m so it stays an exact integer.
// Euclidean and squared distance rank points identically, so both compare
// squared values.
inline Measure scaled_mean_distance(const Point& p, Wide sx, Wide sy, std::int64_t m, DistanceMetric metric) {
  const Measure dx = Measure(Wide{p.x} * m - sx);
  const Measure dy = Measure(Wide{p.y} * m - sy);
  if (metric == DistanceMetric::Manhattan) return abs(dx) + abs(dy);
  return dx * dx + dy * dy;
}

}  // namespace detail

// Repeatedly removes the candidate farthest from the mean of all remaining
// points (ties: lowest id). Candidates are the current hull vertices unless
// hull_only is false.
inline BaselineTrace distance_peel(std::span<const Point> points, DistanceMetric metric, std::size_t k,
                                   bool hull_only = true) {
  if (k > points.size()) throw std::invalid_argument("distance_peel: k exceeds the number of points");
  BaselineTrace out;
  out.method = BaselineMethod::DistanceMean;
  out.metric = metric;
  std::vector<Point> rest(points.begin(), points.end());
  Wide sx = 0, sy = 0;
  for (const Point& p : rest) sx += p.x, sy += p.y;
  while (out.removed.size() < k) {
    const std::int64_t m = static_cast<std::int64_t>(rest.size());
    std::vector<Point> candidates = hull_only && rest.size() >= 3 ? convex_hull(rest) : rest;
    std::optional<Point> best;
    Measure best_d = 0;
    for (const Point& c : candidates) {
      const Measure d = detail::scaled_mean_distance(c, sx, sy, m, metric);
      if (!best || d > best_d || (d == best_d && c.id < best->id)) {
        best = c;
        best_d = d;
      }
    }
    out.removed.push_back(*best);
    sx -= best->x, sy -= best->y;
    std::erase_if(rest, [&](const Point& p) { return p.id == best->id; });
  }
  return out;
}

// Removes whole layers outermost first; each layer is taken clockwise from
// its lowest-id vertex.
inline BaselineTrace layer_peel(std::span<const Point> points, std::size_t k) {
  if (k > points.size()) throw std::invalid_argument("layer_peel: k exceeds the number of points");
  BaselineTrace out;
  out.method = BaselineMethod::LayerPeel;
  if (k == 0) return out;
  const LayerSet layers = convex_layers(points);
  for (const std::vector<Point>& layer : layers.layers) {
    const auto first = std::min_element(layer.begin(), layer.end(),
                                        [](const Point& a, const Point& b) { return a.id < b.id; });
    const std::size_t start = static_cast<std::size_t>(first - layer.begin());
    for (std::size_t i = 0; i < layer.size() && out.removed.size() < k; ++i) {
      out.removed.push_back(layer[(start + i) % layer.size()]);
    }
    if (out.removed.size() == k) break;
  }
  return out;
}

}  // namespace hullpeel
