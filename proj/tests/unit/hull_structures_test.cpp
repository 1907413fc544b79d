#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hullpeel/convex_hull.hpp"
#include "hullpeel/hull_chain.hpp"
#include "hullpeel/oracles.hpp"
#include "test_support.hpp"

using namespace hullpeel;
using testing_support::random_convex_polygon;

namespace {

Point P(std::int64_t x, std::int64_t y, PointId id) { return {x, y, id}; }

std::vector<PointId> ids(const std::vector<Point>& pts) {
  std::vector<PointId> out;
  for (const Point& p : pts) out.push_back(p.id);
  return out;
}

std::set<PointId> id_set(const std::vector<Point>& pts) {
  std::set<PointId> out;
  for (const Point& p : pts) out.insert(p.id);
  return out;
}

// A point is extreme iff it lies in no triangle of three other points.
std::set<PointId> cubic_extreme_points(const std::vector<Point>& pts) {
  std::set<PointId> out;
  for (const Point& p : pts) {
    bool inside = false;
    for (std::size_t i = 0; i < pts.size() && !inside; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !inside; ++j)
        for (std::size_t k = j + 1; k < pts.size() && !inside; ++k) {
          const Point &a = pts[i], &b = pts[j], &c = pts[k];
          if (a.id == p.id || b.id == p.id || c.id == p.id) continue;
          const int s1 = orientation_sign(a, b, p), s2 = orientation_sign(b, c, p), s3 = orientation_sign(c, a, p);
          inside = (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
        }
    if (!inside) out.insert(p.id);
  }
  return out;
}

// Linear-scan tangent: the vertex with every other vertex on the requested
// side of q->v.
PointId scan_tangent(const std::vector<Point>& poly, const Point& q, Side side) {
  const int want = side == Side::Right ? -1 : 1;
  for (const Point& v : poly) {
    bool ok = true;
    for (const Point& w : poly) {
      if (w.id != v.id && orientation_sign(q, v, w) != want) ok = false;
    }
    if (ok) return v.id;
  }
  throw std::logic_error("no tangent");
}

PointId scan_extreme(const std::vector<Point>& poly, const ExtremeKey& key) {
  Point best = poly.front();
  for (const Point& p : poly) {
    if (key.better(p, best)) best = p;
  }
  return best.id;
}

bool is_clockwise_convex(const std::vector<Point>& cyc) {
  const std::size_t n = cyc.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation_sign(cyc[i], cyc[(i + 1) % n], cyc[(i + 2) % n]) >= 0) return false;
  }
  return true;
}

// Same cyclic sequence, possibly rotated.
bool same_cycle(const std::vector<PointId>& a, const std::vector<PointId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  std::vector<PointId> rotated(it, b.end());
  rotated.insert(rotated.end(), b.begin(), it);
  return rotated == a;
}

// n points on a large circle, clockwise; dense but strictly convex.
std::vector<Point> circle_polygon(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = -2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back(P(std::llround(1e9 * std::cos(a)), std::llround(1e9 * std::sin(a)), static_cast<PointId>(i)));
  }
  return convex_hull(pts);
}

}  // namespace

TEST(ConvexHull, SquareWithCenter) {
  const std::vector<Point> pts{P(0, 0, 0), P(4, 0, 1), P(4, 4, 2), P(0, 4, 3), P(2, 1, 4)};
  const std::vector<Point> h = convex_hull(pts);
  EXPECT_EQ(id_set(h), (std::set<PointId>{0, 1, 2, 3}));
  EXPECT_TRUE(is_clockwise_convex(h));
}

TEST(ConvexHull, TriangleAndTooFew) {
  const std::vector<Point> tri{P(0, 0, 0), P(5, 1, 1), P(1, 6, 2)};
  EXPECT_EQ(convex_hull(tri).size(), 3u);
  EXPECT_THROW(convex_hull(std::vector<Point>{P(0, 0, 0), P(1, 1, 1)}), TooFewPoints);
}

TEST(ConvexHull, CirclePointsAllExtreme) {
  std::vector<Point> pts;
  for (int i = 0; i < 16; ++i) {
    const double a = 2 * std::numbers::pi * i / 16 + 0.01;
    pts.push_back(P(std::llround(1e6 * std::cos(a)), std::llround(1e6 * std::sin(a)), static_cast<PointId>(i)));
  }
  pts = canonicalize(pts, 1).points;
  EXPECT_EQ(cubic_extreme_points(pts).size(), 16u);
  EXPECT_EQ(id_set(convex_hull(pts)), cubic_extreme_points(pts));
}

TEST(ConvexHull, MatchesCubicOracleOnRandomSets) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = testing_support::random_instance(5 + seed * 2, seed);
    const auto h = convex_hull(pts);
    EXPECT_EQ(id_set(h), cubic_extreme_points(pts)) << "seed " << seed;
    EXPECT_TRUE(is_clockwise_convex(h));
  }
}

TEST(ConvexLayers, NestedSquaresAndConvexPosition) {
  const std::vector<Point> nested{P(0, 0, 0), P(10, 0, 1), P(10, 10, 2), P(0, 10, 3),
                                  P(3, 2, 4), P(6, 3, 5),  P(8, 6, 6),   P(2, 7, 7)};
  const LayerSet layers = convex_layers(nested);
  ASSERT_EQ(layers.depth(), 2u);
  EXPECT_EQ(layers.layers[0].size(), 4u);
  EXPECT_EQ(layers.layers[1].size(), 4u);
  EXPECT_EQ(layers.layer(5), 2);
  EXPECT_EQ(convex_layers(random_convex_polygon(25, 3)).depth(), 1u);
}

TEST(ConvexLayers, MatchesRepeatedHullOracle) {
  const auto pts = testing_support::random_square(30, 77);
  const LayerSet layers = convex_layers(pts);
  for (const Point& p : pts) EXPECT_EQ(layers.layer(p.id), oracle::brute_layer_index(pts, p.id));
}

TEST(ConvexLayers, EachLayerStrictlyInsideThePrevious) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto pts = testing_support::random_instance(500, seed);
    const LayerSet layers = convex_layers(pts);
    for (std::size_t k = 1; k < layers.depth(); ++k) {
      const auto& outer = layers.layers[k - 1];
      for (const Point& p : layers.layers[k]) {
        for (std::size_t i = 0; i < outer.size(); ++i) {
          ASSERT_LT(orientation_sign(outer[i], outer[(i + 1) % outer.size()], p), 0);
        }
      }
    }
  }
}

TEST(HullChain, TangentsFromOriginToSquare) {
  const std::vector<Point> sq{P(1, 1, 0), P(1, 2, 1), P(2, 2, 2), P(2, 1, 3)};  // clockwise
  const HullChain c(sq);
  const Point q = P(0, 0, 99);
  EXPECT_EQ(c.tangent_from_point(q, Side::Right), 1u);  // (1,2): everything to its right
  EXPECT_EQ(c.tangent_from_point(q, Side::Left), 3u);   // (2,1)
}

TEST(HullChain, TangentFromInsideIsError) {
  const HullChain c(random_convex_polygon(20, 4));
  EXPECT_THROW(c.tangent_from_point(P(0, 0, 999), Side::Left), PointInsideHull);
  EXPECT_THROW(c.tangent_from_point(P(0, 0, 999), Side::Right), PointInsideHull);
}

TEST(HullChain, TangentsFromFarOnXAxisMatchScan) {
  const auto poly = random_convex_polygon(60, 5);
  const HullChain c(poly);
  const Point q = P(std::int64_t{1} << 40, 17, 999);
  EXPECT_EQ(c.tangent_from_point(q, Side::Right), scan_tangent(poly, q, Side::Right));
  EXPECT_EQ(c.tangent_from_point(q, Side::Left), scan_tangent(poly, q, Side::Left));
}

TEST(HullChain, ExtremeVertexExamples) {
  const std::vector<Point> sq{P(0, 0, 0), P(0, 2, 1), P(2, 2, 2), P(2, 0, 3)};
  const HullChain c(sq);
  EXPECT_EQ(c.extreme_vertex(Vec{1, 1}), 2u);
  EXPECT_EQ(c.extreme_vertex(Vec{-1, -1}), 0u);
  // Direction (1,0) ties (2,2) and (2,0); the perpendicular tie-break picks
  // the one further along (0,1).
  EXPECT_EQ(c.extreme_vertex(Vec{1, 0}), 2u);
  const HullChain diamond(std::vector<Point>{P(0, -1, 0), P(-1, 0, 1), P(0, 1, 2), P(1, 0, 3)});
  EXPECT_EQ(diamond.extreme_vertex(Vec{1, 0}), 3u);
}

TEST(HullChain, TangentResultHasBothNeighborsOnOneSide) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto poly = random_convex_polygon(3 + trial % 40, trial);
    const HullChain c(poly);
    const double a = 2 * std::numbers::pi * detail::unit_uniform(rng);
    const Point q = P(std::llround(3e6 * std::cos(a)), std::llround(3e6 * std::sin(a)), 999999);
    for (Side side : {Side::Left, Side::Right}) {
      const PointId v = c.tangent_from_point(q, side);
      const int s1 = orientation_sign(q, c.point(v), c.point(c.next(v)));
      const int s2 = orientation_sign(q, c.point(v), c.point(c.prev(v)));
      EXPECT_EQ(s1, s2);
      EXPECT_EQ(s1, side == Side::Right ? -1 : 1);
    }
  }
}

TEST(HullChain, SpliceOutExamples) {
  HullChain sq(std::vector<Point>{P(0, 0, 0), P(0, 2, 1), P(2, 2, 2), P(2, 0, 3)});
  const auto removed = sq.splice_out(2, 2);
  EXPECT_EQ(ids(removed), std::vector<PointId>{2});
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.next(1), 3u);

  std::vector<Point> hex;
  for (int i = 0; i < 6; ++i) {
    const double a = -2 * std::numbers::pi * i / 6;
    hex.push_back(P(std::llround(1000 * std::cos(a)), std::llround(1000 * std::sin(a)), static_cast<PointId>(i)));
  }
  HullChain h(hex);
  EXPECT_EQ(ids(h.splice_out(5, 0)), (std::vector<PointId>{5, 0}));  // arc across the wrap
  EXPECT_EQ(h.cycle().size(), 4u);
  EXPECT_TRUE(h.structurally_valid());
}

TEST(HullChain, SpliceInExamples) {
  HullChain tri(std::vector<Point>{P(0, 0, 0), P(0, 10, 1), P(10, 0, 2)});
  tri.splice_in(1, std::vector<Point>{P(6, 6, 3)});
  EXPECT_EQ(ids(tri.walk(0, 2)), (std::vector<PointId>{0, 1, 3, 2}));
  EXPECT_TRUE(is_clockwise_convex(tri.cycle()));
  tri.splice_in(1, std::vector<Point>{});
  EXPECT_EQ(tri.size(), 4u);
}

TEST(HullChain, SpliceRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto poly = random_convex_polygon(40, seed);
    HullChain c(poly);
    const std::size_t n = poly.size();
    const std::size_t i = seed % n, len = 1 + seed % (n - 1);
    const PointId from = poly[i].id, to = poly[(i + len - 1) % n].id;
    const PointId before = c.prev(from);
    const auto arc = c.splice_out(from, to);
    EXPECT_EQ(arc.size(), len);
    c.splice_in(before, arc);
    EXPECT_TRUE(same_cycle(ids(c.cycle()), ids(poly)));
    EXPECT_TRUE(c.structurally_valid());
  }
}

TEST(HullChain, RandomRemovalsMatchRecomputedHull) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    const auto poly = random_convex_polygon(80, seed);
    HullChain c(poly);
    std::vector<Point> alive = poly;
    while (alive.size() > 3) {
      const Point& pick = alive[rng() % alive.size()];
      const std::size_t len = 1 + rng() % std::min<std::size_t>(3, alive.size() - 3);
      PointId to = pick.id;
      for (std::size_t k = 1; k < len; ++k) to = c.next(to);
      for (const Point& p : c.splice_out(pick.id, to)) {
        std::erase_if(alive, [&](const Point& q) { return q.id == p.id; });
      }
      ASSERT_TRUE(same_cycle(ids(c.cycle()), ids(convex_hull(alive))));
      ASSERT_TRUE(c.structurally_valid());
    }
  }
}

TEST(HullChain, HeightStaysLogarithmic) {
  const auto poly = circle_polygon(20000);
  ASSERT_EQ(poly.size(), 20000u);
  HullChain c(poly);
  std::mt19937_64 rng(1);
  for (int round = 0; round < 2000; ++round) {
    const PointId a = poly[rng() % poly.size()].id;
    if (!c.contains(a) || c.size() < 10) continue;
    const PointId before = c.prev(a);
    const auto arc = c.splice_out(a, c.next(a));
    if (round % 2 == 0) c.splice_in(before, arc);
  }
  const double bound = 4.0 * std::log2(static_cast<double>(c.size()));
  EXPECT_LE(c.height(), bound) << "size " << c.size();
  EXPECT_TRUE(c.structurally_valid());
}

TEST(HullChain, SmallChainsUseConstantCases) {
  const HullChain one(std::vector<Point>{P(5, 5, 0)});
  EXPECT_EQ(one.tangent_from_point(P(0, 0, 9), Side::Left), 0u);
  EXPECT_EQ(one.extreme_vertex(Vec{1, 0}), 0u);
  const HullChain two(std::vector<Point>{P(0, 0, 0), P(10, 1, 1)});
  EXPECT_EQ(two.extreme_vertex(Vec{1, 0}), 1u);
  EXPECT_EQ(two.tangent_from_point(P(5, 10, 9), Side::Right), 1u);
  EXPECT_EQ(two.tangent_from_point(P(5, 10, 9), Side::Left), 0u);
}

TEST(HullChainProperty, QueriesMatchLinearScan) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto poly = random_convex_polygon(3 + rng() % 200, trial + 1000);
    const HullChain c(poly);
    for (int q = 0; q < 10; ++q) {
      const Vec d{static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 2001) - 1000};
      if (d.x == 0 && d.y == 0) continue;
      ASSERT_EQ(c.extreme_vertex(d), scan_extreme(poly, direction_key(d)));
      const double a = 2 * std::numbers::pi * detail::unit_uniform(rng);
      const double r = 1.05e6 + 5e6 * detail::unit_uniform(rng);
      const Point qp = P(std::llround(r * std::cos(a)), std::llround(r * std::sin(a)), 999999);
      for (Side side : {Side::Left, Side::Right}) {
        ASSERT_EQ(c.tangent_from_point(qp, side), scan_tangent(poly, qp, side));
      }
    }
  }
}
