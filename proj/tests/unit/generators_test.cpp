#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hullpeel/convex_hull.hpp"
#include "hullpeel/generators.hpp"
#include "test_support.hpp"

using namespace hullpeel;

namespace {

double radius(const Point& p) { return std::hypot(static_cast<double>(p.x), static_cast<double>(p.y)) / 1e6; }

}  // namespace

TEST(Generators, DeterministicPerSeed) {
  for (const char* kind : {"disk", "fig2", "fig3", "grid"}) {
    EXPECT_EQ(generate(kind, 300, 3, 7).file.points, generate(kind, 300, 3, 7).file.points) << kind;
  }
  EXPECT_NE(generate_disk(300, 7).file.points, generate_disk(300, 8).file.points);
}

TEST(Generators, UnknownKind) { EXPECT_THROW(generate("spiral", 10, 0, 0), std::invalid_argument); }

TEST(Generators, DiskPointsInsideRadius) {
  const GeneratedInstance g = generate_disk(5000, 3);
  ASSERT_EQ(g.file.points.size(), 5000u);
  EXPECT_EQ(g.file.decimals, 6);
  EXPECT_TRUE(g.planted.empty());
  for (const Point& p : g.file.points) ASSERT_LE(radius(p), kDiskRadius);
}

TEST(Generators, Fig2Layout) {
  const GeneratedInstance g = generate_fig2(20, 2, 5);
  ASSERT_EQ(g.file.points.size(), 24u);
  EXPECT_EQ(g.planted, (std::vector<PointId>{20, 21, 22, 23}));
  for (std::size_t i = 0; i < 20; ++i) {
    const Point& p = g.file.points[i];
    EXPECT_TRUE(p.x >= 0 && p.x <= 1'000'000 && p.y >= 0 && p.y <= 1'000'000);
  }
  for (std::size_t j = 0; j < 2; ++j) {
    const Point& a = g.file.points[20 + 2 * j];
    const Point& b = g.file.points[21 + 2 * j];
    const double gap = std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y)) / 1e6;
    EXPECT_NEAR(gap, 0.02, 0.006);
    const double d = std::hypot(static_cast<double>(a.x) / 1e6 - 0.5, static_cast<double>(a.y) / 1e6 - 0.5);
    EXPECT_GE(d, 10.0);
    EXPECT_LE(d, 15.0);
  }
}

TEST(Generators, Fig3SpikesAreShieldedOnSuccessiveLayers) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GeneratedInstance g = generate_fig3(1000, 3, seed);
    ASSERT_EQ(g.file.points.size(), 1009u);
    ASSERT_EQ(g.planted.size(), 9u);
    const auto pts = canonicalize(g.file.points, seed).points;
    const LayerSet layers = convex_layers(pts, 4);
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_EQ(layers.layer(g.planted[3 * s]), 1) << "seed " << seed;
      EXPECT_EQ(layers.layer(g.planted[3 * s + 1]), 2) << "seed " << seed;
      EXPECT_EQ(layers.layer(g.planted[3 * s + 2]), 3) << "seed " << seed;
    }
  }
}

TEST(Generators, GridRowMajor) {
  const GeneratedInstance g = generate_grid(10, 0);
  ASSERT_EQ(g.file.points.size(), 10u);
  EXPECT_EQ(g.file.points[5], (Point{1, 1, 5}));
  EXPECT_EQ(g.file.points[9], (Point{1, 2, 9}));
}

// Expected hull size of n uniform points in a disk grows like c * n^(1/3).
TEST(Generators, DiskHullSizeGrowsLikeCubeRoot) {
  std::vector<double> logn, logh;
  for (std::size_t n : {1000u, 10000u, 100000u}) {
    double total = 0;
    const int trials = 5;
    for (int s = 0; s < trials; ++s) total += static_cast<double>(convex_hull(generate_disk(n, 100 + s).file.points).size());
    logn.push_back(std::log(static_cast<double>(n)));
    logh.push_back(std::log(total / trials));
  }
  // Least-squares slope and intercept in log-log space.
  const double mx = (logn[0] + logn[1] + logn[2]) / 3, my = (logh[0] + logh[1] + logh[2]) / 3;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) sxy += (logn[i] - mx) * (logh[i] - my), sxx += (logn[i] - mx) * (logn[i] - mx);
  const double slope = sxy / sxx;
  EXPECT_NEAR(slope, 1.0 / 3.0, 0.06);
  for (int i = 0; i < 3; ++i) {
    const double fitted = std::exp(my + (logn[i] - mx) / 3.0);
    const double observed = std::exp(logh[i]);
    EXPECT_LE(observed, 2 * fitted);
    EXPECT_GE(observed, fitted / 2);
  }
}
