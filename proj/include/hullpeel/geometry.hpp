#pragma once

// Exact 2D primitives over integer coordinates.
//
// Coordinates are 64-bit integers bounded by |c| < 2^62, so coordinate
// differences fit in int64 and every 2x2 determinant fits in __int128.
// Sums of many determinants (areas, objective values) use Measure.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hullpeel/errors.hpp"

namespace hullpeel {

using PointId = std::uint32_t;
using Wide = __int128;
using Measure = boost::multiprecision::int256_t;

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 62;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  PointId id = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool same_location(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Direction vector; components are differences of in-range coordinates.
struct Vec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Vec&, const Vec&) = default;
};

inline Vec operator-(const Point& b, const Point& a) { return {b.x - a.x, b.y - a.y}; }
inline Vec perp_left(const Vec& v) { return {-v.y, v.x}; }
inline Vec negate(const Vec& v) { return {-v.x, -v.y}; }

inline Wide dot(const Vec& d, const Point& p) { return Wide{d.x} * p.x + Wide{d.y} * p.y; }
inline Wide cross(const Vec& a, const Vec& b) { return Wide{a.x} * b.y - Wide{a.y} * b.x; }

// Twice the signed area of triangle abc; positive when c is left of a->b.
inline Wide cross(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

inline int orientation_sign(const Point& a, const Point& b, const Point& c) {
  const Wide d = cross(a, b, c);
  return (d > 0) - (d < 0);
}

enum class Orientation { Clockwise, CounterClockwise };

inline Orientation orient(const Point& a, const Point& b, const Point& c) {
  if (same_location(a, b) || same_location(a, c) || same_location(b, c)) {
    throw DegenerateInput("orient: coincident points");
  }
  const int s = orientation_sign(a, b, c);
  if (s == 0) throw DegenerateInput("orient: collinear triple");
  return s > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
}

inline bool left_of(const Point& p, const Point& a, const Point& b) {
  return orient(a, b, p) == Orientation::CounterClockwise;
}

// Strict interior test; t, u, v are in clockwise order. Boundary points are outside.
inline bool in_triangle(const Point& p, const Point& t, const Point& u, const Point& v) {
  return orientation_sign(t, u, p) < 0 && orientation_sign(u, v, p) < 0 && orientation_sign(v, t, p) < 0;
}

// Twice the shoelace term a.y*b.x - a.x*b.y / 2. Summed over the edges of a
// closed clockwise cycle it gives twice the enclosed area (positive).
inline Measure twice_shoelace_term(const Point& a, const Point& b) {
  return Measure(Wide{a.y} * b.x - Wide{a.x} * b.y);
}

inline Measure twice_signed_area_cw(std::span<const Point> cycle) {
  Measure sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    sum += twice_shoelace_term(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return sum;
}

// Twice the absolute area of a simple polygon given in either orientation.
inline Measure twice_polygon_area(std::span<const Point> vertices) {
  if (vertices.size() < 3) throw TooFewPoints(vertices.size());
  Measure s = twice_signed_area_cw(vertices);
  return s < 0 ? Measure(-s) : s;
}

// Lexicographic key used wherever a linear functional may tie: maximize
// dot(primary, p), then dot(secondary, p), then prefer the lower id.
struct ExtremeKey {
  Vec primary;
  Vec secondary;

  bool better(const Point& a, const Point& b) const {
    const Wide pa = dot(primary, a), pb = dot(primary, b);
    if (pa != pb) return pa > pb;
    const Wide sa = dot(secondary, a), sb = dot(secondary, b);
    if (sa != sb) return sa > sb;
    return a.id < b.id;
  }
};

// Direction d with a deterministic perpendicular tie-break.
inline ExtremeKey direction_key(const Vec& d) { return {d, perp_left(d)}; }

inline void check_range(const Point& p) {
  if (p.x <= -kCoordinateLimit || p.x >= kCoordinateLimit || p.y <= -kCoordinateLimit ||
      p.y >= kCoordinateLimit) {
    throw CoordinateRange("coordinate magnitude must stay below 2^62");
  }
}

}  // namespace hullpeel
