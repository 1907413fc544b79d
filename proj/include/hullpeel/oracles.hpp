#pragma once

// Slow reference implementations. Everything here recomputes hulls from
// scratch and shares only the geometric predicates with the fast path.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hullpeel/convex_hull.hpp"
#include "hullpeel/objective.hpp"
#include "hullpeel/peeler.hpp"

namespace hullpeel {

namespace oracle {

// Hull of any point count: sets of one or two points are their own hull.
inline std::vector<Point> hull_or_all(std::span<const Point> pts) {
  if (pts.size() < 3) return {pts.begin(), pts.end()};
  return convex_hull(pts);
}

inline std::vector<Point> without(std::span<const Point> pts, PointId id) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (p.id != id) out.push_back(p);
  }
  return out;
}

// Objective value of a clockwise cycle, in the same integer units as the
// fast path. Two points form the degenerate cycle a -> b -> a.
inline Measure cycle_value(const Objective& objective, std::span<const Point> cycle) {
  const std::size_t m = cycle.size();
  switch (objective.kind()) {
    case ObjectiveKind::Area:
      return m < 3 ? Measure(0) : twice_signed_area_cw(cycle);
    case ObjectiveKind::Perimeter: {
      if (m < 2) return 0;
      Measure sum = 0;
      for (std::size_t i = 0; i < m; ++i) sum += quantized_length(cycle[i], cycle[(i + 1) % m]);
      return sum;
    }
    case ObjectiveKind::Count:
      return static_cast<std::int64_t>(m);
  }
  return 0;
}

// sens(u) as an objective drop: how much the hull value falls when u leaves.
// For the count objective the drop is offset so it counts the replacement
// chain's edges, |hull(P - u)| - |hull(P)| + 2.
inline Measure hull_drop(const Objective& objective, std::span<const Point> pts, std::span<const Point> hull,
                         PointId u) {
  const std::vector<Point> rest = without(pts, u);
  const std::vector<Point> after = hull_or_all(rest);
  if (objective.kind() == ObjectiveKind::Count) {
    return static_cast<std::int64_t>(after.size()) - static_cast<std::int64_t>(hull.size()) + 2;
  }
  return cycle_value(objective, hull) - cycle_value(objective, after);
}

// A(u) as a set: vertices of hull(P - u) that are not on hull(P).
inline std::vector<PointId> active_ids(std::span<const Point> pts, std::span<const Point> hull, PointId u) {
  std::set<PointId> on_hull;
  for (const Point& p : hull) on_hull.insert(p.id);
  std::vector<PointId> out;
  for (const Point& p : hull_or_all(without(pts, u))) {
    if (!on_hull.count(p.id)) out.push_back(p.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Owner/active pairs over the whole current hull.
inline std::set<std::pair<PointId, PointId>> active_pairs(std::span<const Point> pts) {
  std::set<std::pair<PointId, PointId>> out;
  if (pts.size() < 3) return out;
  const std::vector<Point> hull = convex_hull(pts);
  if (hull.size() < 3) return out;
  for (const Point& u : hull) {
    for (PointId a : active_ids(pts, hull, u.id)) out.emplace(u.id, a);
  }
  return out;
}

// Ordered A(u) by gift wrapping clockwise from t (u's counterclockwise
// neighbor) around pts - u until v is reached.
inline std::vector<Point> gift_wrap_active(std::span<const Point> pts, const Point& t, PointId u, const Point& v) {
  const std::vector<Point> rest = without(pts, u);
  std::vector<Point> out;
  Point cur = t;
  for (std::size_t guard = 0; guard <= rest.size(); ++guard) {
    std::optional<Point> next;
    for (const Point& c : rest) {
      if (c.id == cur.id) continue;
      // Clockwise wrap: keep the candidate with no point to its left.
      if (!next || orientation_sign(cur, *next, c) > 0) next = c;
    }
    if (!next || next->id == v.id) return out;
    out.push_back(*next);
    cur = *next;
  }
  throw Error("gift wrap did not reach the successor");
}

inline std::vector<Point> gift_wrap_active(const PeelState& state, PointId u) {
  const HullChain& l1 = state.first_layer();
  return gift_wrap_active(state.remaining_points(), l1.point(l1.prev(u)), u, l1.point(l1.next(u)));
}

inline int brute_layer_index(std::span<const Point> pts, PointId id) {
  std::vector<Point> rest(pts.begin(), pts.end());
  for (int layer = 1; !rest.empty(); ++layer) {
    const std::vector<Point> hull = hull_or_all(rest);
    for (const Point& p : hull) {
      if (p.id == id) return layer;
    }
    std::set<PointId> drop;
    for (const Point& p : hull) drop.insert(p.id);
    std::erase_if(rest, [&](const Point& p) { return drop.count(p.id) != 0; });
  }
  throw UnknownPoint(id);
}

}  // namespace oracle

struct OracleTrace {
  std::vector<PeelEvent> events;
  std::uint64_t activations = 0;
  bool terminated = false;
};

// Greedy peeling by full recomputation each step, O(n^3 log n) overall.
inline OracleTrace naive_weighted_peel(std::span<const Point> points, Objective objective,
                                       std::size_t k = kPeelAll) {
  std::vector<Point> pts(points.begin(), points.end());
  if (pts.size() < 3) throw TooFewPoints(pts.size());
  OracleTrace trace;
  auto pairs = oracle::active_pairs(pts);
  trace.activations = pairs.size();
  while (trace.events.size() < k && pts.size() >= 3) {
    const std::vector<Point> hull = convex_hull(pts);
    std::optional<Point> best;
    Measure best_sens = 0;
    for (const Point& u : hull) {
      const Measure s = oracle::hull_drop(objective, pts, hull, u.id);
      if (!best || s > best_sens || (s == best_sens && u.id < best->id)) {
        best = u;
        best_sens = s;
      }
    }
    pts = oracle::without(pts, best->id);
    auto after = oracle::active_pairs(pts);
    std::uint64_t fresh = 0;
    for (const auto& pr : after) fresh += pairs.count(pr) ? 0 : 1;
    pairs = std::move(after);

    PeelEvent e;
    e.step = trace.events.size() + 1;
    e.peeled = *best;
    e.sensitivity = best_sens;
    e.newly_active = fresh;
    const std::vector<Point> l1 = oracle::hull_or_all(pts);
    e.l1_size_after = l1.size();
    std::vector<Point> inner = pts;
    std::erase_if(inner, [&](const Point& p) {
      return std::any_of(l1.begin(), l1.end(), [&](const Point& q) { return q.id == p.id; });
    });
    e.l2_size_after = oracle::hull_or_all(inner).size();
    trace.activations += fresh;
    trace.events.push_back(std::move(e));
  }
  trace.terminated = pts.size() < 3;
  return trace;
}

struct KPeelResult {
  std::vector<PointId> removed;  // ascending ids
  Measure twice_area = 0;        // hull area of the survivors, doubled
};

inline double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * static_cast<long double>(n - k + i) / i;
  return static_cast<double>(std::round(c));
}

// Removes the k points whose joint removal leaves the smallest hull area.
// Ties go to the lexicographically smallest id set.
inline KPeelResult exact_k_peel(std::span<const Point> points, std::size_t k,
                                std::uint64_t limit = 1'000'000) {
  const std::size_t n = points.size();
  if (k > n) throw Error("exact_k_peel: k exceeds the number of points");
  const double combos = binomial(n, k);
  if (combos > static_cast<double>(limit)) throw InstanceTooLarge(combos, static_cast<double>(limit));
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) { return a.id < b.id; });

  std::optional<KPeelResult> best;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Point> rest;
  std::vector<char> gone(n);
  while (true) {
    std::fill(gone.begin(), gone.end(), 0);
    for (std::size_t i : pick) gone[i] = 1;
    rest.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!gone[i]) rest.push_back(sorted[i]);
    }
    const Measure area = rest.size() < 3 ? Measure(0) : twice_polygon_area(convex_hull(rest));
    if (!best || area < best->twice_area) {
      KPeelResult r;
      r.twice_area = area;
      for (std::size_t i : pick) r.removed.push_back(sorted[i].id);
      best = std::move(r);
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return *best;
}

}  // namespace hullpeel
