#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "hullpeel/baselines.hpp"
#include "hullpeel/oracles.hpp"
#include "test_support.hpp"

using namespace hullpeel;
using boost::multiprecision::cpp_rational;
using testing_support::square_plus_point;

namespace {

Point P(std::int64_t x, std::int64_t y, PointId id) { return {x, y, id}; }

std::vector<PointId> ids(const std::vector<Point>& pts) {
  std::vector<PointId> out;
  for (const Point& p : pts) out.push_back(p.id);
  return out;
}

// Independent farthest-from-mean peel on exact rationals.
std::vector<PointId> rational_distance_peel(std::vector<Point> rest, DistanceMetric metric, std::size_t k,
                                            bool hull_only) {
  std::vector<PointId> out;
  while (out.size() < k) {
    cpp_rational mx = 0, my = 0;
    for (const Point& p : rest) mx += p.x, my += p.y;
    mx /= static_cast<long long>(rest.size());
    my /= static_cast<long long>(rest.size());
    const std::vector<Point> candidates = hull_only && rest.size() >= 3 ? oracle::hull_or_all(rest) : rest;
    std::optional<Point> best;
    cpp_rational best_d;
    for (const Point& c : candidates) {
      const cpp_rational dx = cpp_rational(c.x) - mx, dy = cpp_rational(c.y) - my;
      const cpp_rational d = metric == DistanceMetric::Manhattan ? cpp_rational(abs(dx) + abs(dy))
                                                                   : cpp_rational(dx * dx + dy * dy);
      if (!best || d > best_d || (d == best_d && c.id < best->id)) {
        best = c;
        best_d = d;
      }
    }
    out.push_back(best->id);
    std::erase_if(rest, [&](const Point& p) { return p.id == best->id; });
  }
  return out;
}

}  // namespace

TEST(DistancePeel, SquarePlusPointEuclidean) {
  // Mean (2, 1.8): the top corners tie at the largest distance.
  const BaselineTrace t = distance_peel(square_plus_point(), DistanceMetric::Euclidean, 2);
  EXPECT_EQ(ids(t.removed), (std::vector<PointId>{2, 3}));
  EXPECT_EQ(t.method, BaselineMethod::DistanceMean);
  EXPECT_EQ(t.metric, DistanceMetric::Euclidean);
}

TEST(DistancePeel, SquarePlusPointManhattan) {
  EXPECT_EQ(ids(distance_peel(square_plus_point(), DistanceMetric::Manhattan, 1).removed), std::vector<PointId>{2});
}

TEST(DistancePeel, KZeroAndTooLarge) {
  EXPECT_TRUE(distance_peel(square_plus_point(), DistanceMetric::Squared, 0).removed.empty());
  EXPECT_THROW(distance_peel(square_plus_point(), DistanceMetric::Squared, 6), std::invalid_argument);
}

TEST(DistancePeel, MetricNames) {
  for (DistanceMetric m : {DistanceMetric::Euclidean, DistanceMetric::Squared, DistanceMetric::Manhattan}) {
    EXPECT_EQ(metric_from_name(metric_name(m)), m);
  }
  EXPECT_THROW(metric_from_name("cosine"), std::invalid_argument);
}

TEST(DistancePeelProperty, MatchesRationalOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pts = testing_support::random_instance(10 + seed * 3, seed);
    const DistanceMetric metric = seed % 3 == 0   ? DistanceMetric::Euclidean
                                  : seed % 3 == 1 ? DistanceMetric::Squared
                                                  : DistanceMetric::Manhattan;
    const bool hull_only = seed % 2 == 0;
    const std::size_t k = pts.size() / 2;
    EXPECT_EQ(ids(distance_peel(pts, metric, k, hull_only).removed),
              rational_distance_peel(pts, metric, k, hull_only))
        << "seed " << seed;
  }
}

TEST(LayerPeel, NestedSquares) {
  const std::vector<Point> nested{P(0, 0, 0), P(10, 0, 1), P(10, 10, 2), P(0, 10, 3),
                                  P(3, 2, 4), P(6, 3, 5),  P(8, 6, 6),   P(2, 7, 7)};
  const BaselineTrace t = layer_peel(nested, 5);
  // Clockwise from the lowest id on each layer.
  EXPECT_EQ(ids(t.removed), (std::vector<PointId>{0, 3, 2, 1, 4}));
  EXPECT_EQ(t.method, BaselineMethod::LayerPeel);
  EXPECT_FALSE(t.metric.has_value());
  EXPECT_TRUE(layer_peel(nested, 0).removed.empty());
  EXPECT_EQ(layer_peel(nested, 8).removed.size(), 8u);
  EXPECT_THROW(layer_peel(nested, 9), std::invalid_argument);
}

TEST(LayerPeelProperty, LayerIndexNeverDecreases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pts = testing_support::random_instance(40, seed);
    const BaselineTrace t = layer_peel(pts, pts.size());
    int last = 0;
    for (const Point& p : t.removed) {
      const int layer = oracle::brute_layer_index(pts, p.id);
      EXPECT_GE(layer, last);
      last = layer;
    }
  }
}
