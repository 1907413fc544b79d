#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hullpeel/canonicalize.hpp"
#include "hullpeel/convex_hull.hpp"
#include "hullpeel/generators.hpp"

namespace testing_support {

using hullpeel::Point;
using hullpeel::PointId;

inline std::vector<Point> square_plus_point() {
  return {{0, 0, 0}, {4, 0, 1}, {4, 4, 2}, {0, 4, 3}, {2, 1, 4}};
}

// Uniform integer points in [-range, range]^2, canonicalized (duplicates and
// collinear triples are common at small ranges).
inline std::vector<Point> random_square(std::size_t n, std::uint64_t seed, std::int64_t range = 1000) {
  std::mt19937_64 rng(seed);
  std::vector<Point> raw;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    const auto y = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    raw.push_back({x, y, static_cast<PointId>(i)});
  }
  return hullpeel::canonicalize(raw, seed).points;
}

// Points near a circle: most of them are hull vertices.
inline std::vector<Point> random_ring(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> raw;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * hullpeel::detail::unit_uniform(rng);
    const double r = 1e6 * (0.9 + 0.1 * hullpeel::detail::unit_uniform(rng));
    raw.push_back({std::llround(r * std::cos(a)), std::llround(r * std::sin(a)), static_cast<PointId>(i)});
  }
  return hullpeel::canonicalize(raw, seed).points;
}

// A few Gaussian clusters.
inline std::vector<Point> random_clusters(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::pair<double, double>> centers;
  for (int c = 0; c < 3; ++c) {
    centers.emplace_back(1e5 * hullpeel::detail::unit_uniform(rng), 1e5 * hullpeel::detail::unit_uniform(rng));
  }
  std::vector<Point> raw;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [cx, cy] = centers[i % centers.size()];
    raw.push_back({std::llround(cx + 1e4 * gauss(rng)), std::llround(cy + 1e4 * gauss(rng)), static_cast<PointId>(i)});
  }
  return hullpeel::canonicalize(raw, seed).points;
}

inline std::vector<Point> random_disk(std::size_t n, std::uint64_t seed) {
  return hullpeel::canonicalize(hullpeel::generate_disk(n, seed).file.points, seed).points;
}

// Mixed workload keyed by seed.
inline std::vector<Point> random_instance(std::size_t n, std::uint64_t seed) {
  switch (seed % 4) {
    case 0: return random_square(n, seed, 1000);
    case 1: return random_disk(n, seed);
    case 2: return random_clusters(n, seed);
    default: return random_square(n, seed, 12);  // heavy degeneracy before canonicalization
  }
}

// Random convex polygon (clockwise) with about n vertices.
inline std::vector<Point> random_convex_polygon(std::size_t n, std::uint64_t seed) {
  return hullpeel::convex_hull(random_ring(n, seed));
}

}  // namespace testing_support
