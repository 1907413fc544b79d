#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

struct Offset {
  PointId id = 0;
  std::int64_t dx = 0;
  std::int64_t dy = 0;
};

struct CanonicalSet {
  std::vector<Point> points;     // sorted by id
  int shift = 0;                 // coordinates were multiplied by 2^shift before offsets
  std::vector<Offset> offsets;   // one per point when perturbed
  std::vector<PointId> dropped;  // duplicates removed (a lower id at the same location survived)

  bool perturbed() const { return shift > 0; }
};

struct CanonicalizeOptions {
  // Above this size the O(n^2 log n) collinearity scan is skipped; strict
  // predicates downstream report any triple they meet (see peel_with_retry).
  std::size_t exhaustive_limit = 2048;
  // > 0 forces perturbation, starting at this attempt number.
  int force_attempt = 0;
};

namespace detail {

// Returns a collinear triple of ids, if any. For every pivot the other points
// are sorted by direction folded into the upper half-plane; equal directions
// are adjacent after sorting.
inline std::optional<std::array<PointId, 3>> find_collinear_triple(std::span<const Point> pts) {
  std::vector<std::pair<Vec, PointId>> dirs;
  dirs.reserve(pts.size());
  for (const Point& pivot : pts) {
    dirs.clear();
    for (const Point& q : pts) {
      if (q.id == pivot.id) continue;
      Vec d = q - pivot;
      if (d.y < 0 || (d.y == 0 && d.x < 0)) d = negate(d);
      dirs.emplace_back(d, q.id);
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return cross(a.first, b.first) > 0; });
    for (std::size_t i = 1; i < dirs.size(); ++i) {
      if (cross(dirs[i - 1].first, dirs[i].first) == 0) {
        return std::array<PointId, 3>{pivot.id, dirs[i - 1].second, dirs[i].second};
      }
    }
  }
  return std::nullopt;
}

inline int shift_for_attempt(int attempt) { return 4 + 4 * attempt; }

inline CanonicalSet perturb(const std::vector<Point>& base, std::uint64_t seed, int attempt) {
  CanonicalSet out;
  out.shift = shift_for_attempt(attempt);
  const std::int64_t span = (std::int64_t{1} << (out.shift - 2)) - 1;
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt)));
  auto draw = [&] {
    const auto r = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * span + 1));
    return r - span;
  };
  const std::int64_t limit = kCoordinateLimit >> out.shift;
  out.points.reserve(base.size());
  out.offsets.reserve(base.size());
  for (const Point& p : base) {
    if (p.x <= -limit || p.x >= limit || p.y <= -limit || p.y >= limit) {
      throw CoordinateRange("coordinates too large to perturb exactly");
    }
    const Offset off{p.id, draw(), draw()};
    out.offsets.push_back(off);
    out.points.push_back({p.x * (std::int64_t{1} << out.shift) + off.dx,
                          p.y * (std::int64_t{1} << out.shift) + off.dy, p.id});
  }
  return out;
}

}  // namespace detail

inline bool has_collinear_triple(std::span<const Point> pts) {
  return detail::find_collinear_triple(pts).has_value();
}

// Drops duplicate locations (lowest id wins) and, when needed, applies a
// seed-determined integer perturbation until no three points are collinear.
// Output is sorted by id. Idempotent: an input already in general position is
// returned unchanged.
inline CanonicalSet canonicalize(std::span<const Point> input, std::uint64_t seed,
                                 CanonicalizeOptions options = {}) {
  std::vector<Point> sorted(input.begin(), input.end());
  for (const Point& p : sorted) check_range(p);
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });

  CanonicalSet result;
  std::vector<Point> base;
  base.reserve(sorted.size());
  for (const Point& p : sorted) {
    if (!base.empty() && same_location(base.back(), p)) {
      result.dropped.push_back(p.id);
    } else {
      base.push_back(p);
    }
  }
  if (base.size() < 3) throw TooFewPoints(base.size());
  std::sort(base.begin(), base.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
  std::sort(result.dropped.begin(), result.dropped.end());

  const bool checkable = base.size() <= options.exhaustive_limit;
  if (options.force_attempt <= 0 && (!checkable || !has_collinear_triple(base))) {
    result.points = std::move(base);
    return result;
  }

  for (int attempt = std::max(1, options.force_attempt);; ++attempt) {
    CanonicalSet candidate = detail::perturb(base, seed, attempt);
    if (!checkable || !has_collinear_triple(candidate.points)) {
      candidate.dropped = std::move(result.dropped);
      return candidate;
    }
  }
}

}  // namespace hullpeel
