#pragma once

// Seeded instance generators. Coordinates carry six decimals and are stored
// scaled to integers, so an instance written to CSV re-parses to the same
// points.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hullpeel/point_io.hpp"

namespace hullpeel {

struct GeneratedInstance {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t n = 0;         // size parameter as requested
  std::size_t outliers = 0;  // outlier parameter as requested
  PointFile file;
  std::vector<PointId> planted;
};

namespace detail {

inline constexpr int kGeneratorDecimals = 6;
inline constexpr double kGeneratorScale = 1e6;

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Point scaled_point(double x, double y, std::size_t id) {
  return Point{std::llround(x * kGeneratorScale), std::llround(y * kGeneratorScale), static_cast<PointId>(id)};
}

inline void add_disk(std::vector<Point>& out, std::size_t n, double radius, std::mt19937_64& rng) {
  const std::size_t target = out.size() + n;
  while (out.size() < target) {
    const double x = 2.0 * unit_uniform(rng) - 1.0;
    const double y = 2.0 * unit_uniform(rng) - 1.0;
    if (x * x + y * y < 1.0) out.push_back(scaled_point(x * radius, y * radius, out.size()));
  }
}

}  // namespace detail

inline constexpr double kDiskRadius = 1000.0;

// n points uniform in a disk of radius 1000 centered at the origin.
inline GeneratedInstance generate_disk(std::size_t n, std::uint64_t seed) {
  GeneratedInstance g{"disk", seed, n, 0, {}, {}};
  g.file.decimals = detail::kGeneratorDecimals;
  std::mt19937_64 rng(seed);
  g.file.points.reserve(n);
  detail::add_disk(g.file.points, n, kDiskRadius, rng);
  return g;
}

// A cluster of n points in the unit square plus `pairs` far outlier pairs.
// Each pair sits 10-15 units from the cluster with its two points 0.02 apart
// along the ray from the cluster, so the outer point shields the inner one.
inline GeneratedInstance generate_fig2(std::size_t n, std::size_t pairs, std::uint64_t seed) {
  GeneratedInstance g{"fig2", seed, n, pairs, {}, {}};
  g.file.decimals = detail::kGeneratorDecimals;
  std::mt19937_64 rng(seed);
  auto& pts = g.file.points;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(detail::scaled_point(detail::unit_uniform(rng), detail::unit_uniform(rng), pts.size()));
  }
  for (std::size_t j = 0; j < pairs; ++j) {
    const double angle = 2.0 * std::numbers::pi * (j + 0.25 + 0.5 * detail::unit_uniform(rng)) / pairs;
    const double r = 10.0 + 5.0 * detail::unit_uniform(rng);
    const double dx = std::cos(angle), dy = std::sin(angle);
    const double lateral = 0.005 * (2.0 * detail::unit_uniform(rng) - 1.0);
    const double bx = 0.5 + r * dx, by = 0.5 + r * dy;
    g.planted.push_back(static_cast<PointId>(pts.size()));
    pts.push_back(detail::scaled_point(bx, by, pts.size()));
    g.planted.push_back(static_cast<PointId>(pts.size()));
    pts.push_back(detail::scaled_point(bx + 0.02 * dx - lateral * dy, by + 0.02 * dy + lateral * dx, pts.size()));
  }
  return g;
}

// n points uniform in the disk plus `spikes` shielded outlier spikes. A
// spike is three points on (nearly) one ray at 1.45, 1.3 and 1.15 radii:
// the tip is on the first convex layer and hides the other two on the second
// and third layers.
inline GeneratedInstance generate_fig3(std::size_t n, std::size_t spikes, std::uint64_t seed) {
  GeneratedInstance g{"fig3", seed, n, spikes, {}, {}};
  g.file.decimals = detail::kGeneratorDecimals;
  std::mt19937_64 rng(seed);
  auto& pts = g.file.points;
  detail::add_disk(pts, n, kDiskRadius, rng);
  for (std::size_t j = 0; j < spikes; ++j) {
    const double angle = 2.0 * std::numbers::pi * (j + 0.25 + 0.5 * detail::unit_uniform(rng)) / spikes;
    for (double factor : {1.45, 1.3, 1.15}) {
      const double a = angle + 0.002 * (2.0 * detail::unit_uniform(rng) - 1.0);
      const double r = factor * kDiskRadius;
      g.planted.push_back(static_cast<PointId>(pts.size()));
      pts.push_back(detail::scaled_point(r * std::cos(a), r * std::sin(a), pts.size()));
    }
  }
  return g;
}

// The first n points of a square integer grid, row by row. Highly
// degenerate on purpose.
inline GeneratedInstance generate_grid(std::size_t n, std::uint64_t seed) {
  GeneratedInstance g{"grid", seed, n, 0, {}, {}};
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  for (std::size_t i = 0; i < n; ++i) {
    g.file.points.push_back(Point{static_cast<std::int64_t>(i % side), static_cast<std::int64_t>(i / side),
                                  static_cast<PointId>(i)});
  }
  return g;
}

inline GeneratedInstance generate(std::string_view kind, std::size_t n, std::size_t outliers, std::uint64_t seed) {
  if (kind == "disk") return generate_disk(n, seed);
  if (kind == "fig2") return generate_fig2(n, outliers, seed);
  if (kind == "fig3") return generate_fig3(n, outliers, seed);
  if (kind == "grid") return generate_grid(n, seed);
  throw std::invalid_argument("unknown instance kind '" + std::string(kind) + "'");
}

}  // namespace hullpeel
