#pragma once

// Deletion-only point set answering "extreme live point" and "farthest live
// point beyond a directed line" queries. Backed by a kd-tree whose node boxes
// are kept tight around live points, so a query is an exact branch-and-bound
// over box corners. Only the outer hull of the live set is ever observable
// through these queries.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

class CenterHull {
 public:
  CenterHull() = default;

  explicit CenterHull(std::span<const Point> points) : pts_(points.begin(), points.end()) {
    PointId max_id = 0;
    for (const Point& p : pts_) max_id = std::max(max_id, p.id);
    if (!pts_.empty()) slot_of_.assign(static_cast<std::size_t>(max_id) + 1, -1);
    alive_.assign(pts_.size(), 1);
    leaf_of_.assign(pts_.size(), -1);
    live_ = pts_.size();
    if (!pts_.empty()) {
      nodes_.reserve(4 * pts_.size() / kLeafSize + 4);
      build(0, static_cast<int>(pts_.size()), -1);
    }
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (slot_of_[pts_[i].id] >= 0) throw Error("center: duplicate point id");
      slot_of_[pts_[i].id] = static_cast<int>(i);
    }
  }

  std::size_t live_count() const { return live_; }
  bool empty() const { return live_ == 0; }

  bool is_live(PointId id) const {
    return id < slot_of_.size() && slot_of_[id] >= 0 && alive_[slot_of_[id]];
  }

  std::vector<Point> live_points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (alive_[i]) out.push_back(pts_[i]);
    }
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
    return out;
  }

  // Live point maximizing `key`.
  std::optional<Point> extreme(const ExtremeKey& key) const {
    ++extreme_queries_;
    Search s{key, false, 0, nullptr, nullptr, -1};
    if (!nodes_.empty()) visit(0, s);
    if (s.best < 0) return std::nullopt;
    return pts_[s.best];
  }

  // Among live points strictly left of a->b, the one farthest from the line.
  std::optional<Point> extreme_beyond(const Point& a, const Point& b) const {
    ++extreme_queries_;
    const Vec ab = b - a;
    Search s{ExtremeKey{perp_left(ab), ab}, true, dot(perp_left(ab), a), &a, &b, -1};
    if (!nodes_.empty()) visit(0, s);
    if (s.best < 0) return std::nullopt;
    return pts_[s.best];
  }

  // Same query with the side of line ab chosen by `outward`.
  std::optional<Point> extreme_beyond(const Point& a, const Point& b, const Vec& outward) const {
    const Wide side = cross(b - a, outward);
    if (side == 0) throw Error("extreme_beyond: outward direction parallel to the line");
    return side > 0 ? extreme_beyond(a, b) : extreme_beyond(b, a);
  }

  void delete_point(PointId id) {
    if (!is_live(id)) throw UnknownPoint(id);
    const int s = slot_of_[id];
    alive_[s] = 0;
    --live_;
    int node = leaf_of_[s];
    refit_leaf(node);
    for (node = nodes_[node].parent; node >= 0; node = nodes_[node].parent) refit_inner(node);
  }

  // Fills the gap left of a->b: returns the clockwise chain of live points
  // that lie on hull({a, b} + live) strictly left of a->b, deleting each of
  // them. Issues exactly 2k + 1 extreme queries for k returned points.
  std::vector<Point> restore_gap(const Point& a, const Point& b) {
    std::vector<Point> out;
    gap(a, b, out, [this](const Point& z) { delete_point(z.id); });
    return out;
  }

  // Clockwise hull of the live set; no deletions.
  std::vector<Point> outer_chain() const {
    return hull_with(std::nullopt, [](const Point&) {});
  }

  // Clockwise hull of live points plus an optional anchor (anchor first when
  // present); the live points on it are deleted.
  std::vector<Point> extract_hull(std::optional<Point> anchor) {
    return hull_with(anchor, [this](const Point& z) { delete_point(z.id); });
  }

  std::uint64_t extreme_queries() const { return extreme_queries_; }

 private:
  static constexpr int kLeafSize = 8;

  struct Node {
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    int begin = 0, end = 0;
    int left = -1, right = -1, parent = -1;
    std::uint32_t live = 0;
  };

  struct Search {
    ExtremeKey key;
    bool beyond;
    Wide threshold;  // dot(key.primary, a) when `beyond`
    const Point* a;
    const Point* b;
    int best;
  };

  int build(int begin, int end, int parent) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[index].begin = begin;
    nodes_[index].end = end;
    nodes_[index].parent = parent;
    if (end - begin <= kLeafSize) {
      for (int i = begin; i < end; ++i) leaf_of_[i] = index;
      refit_leaf(index);
      return index;
    }
    std::int64_t lx = pts_[begin].x, hx = lx, ly = pts_[begin].y, hy = ly;
    for (int i = begin; i < end; ++i) {
      lx = std::min(lx, pts_[i].x), hx = std::max(hx, pts_[i].x);
      ly = std::min(ly, pts_[i].y), hy = std::max(hy, pts_[i].y);
    }
    const int mid = begin + (end - begin) / 2;
    const bool split_x = Wide{hx} - lx >= Wide{hy} - ly;
    std::nth_element(pts_.begin() + begin, pts_.begin() + mid, pts_.begin() + end,
                     [split_x](const Point& p, const Point& q) {
                       if (split_x) return p.x != q.x ? p.x < q.x : p.y < q.y;
                       return p.y != q.y ? p.y < q.y : p.x < q.x;
                     });
    const int l = build(begin, mid, index);
    const int r = build(mid, end, index);
    nodes_[index].left = l;
    nodes_[index].right = r;
    refit_inner(index);
    return index;
  }

  void refit_leaf(int index) {
    Node& n = nodes_[index];
    n.live = 0;
    for (int i = n.begin; i < n.end; ++i) {
      if (!alive_[i]) continue;
      const Point& p = pts_[i];
      if (n.live == 0) {
        n.min_x = n.max_x = p.x;
        n.min_y = n.max_y = p.y;
      } else {
        n.min_x = std::min(n.min_x, p.x), n.max_x = std::max(n.max_x, p.x);
        n.min_y = std::min(n.min_y, p.y), n.max_y = std::max(n.max_y, p.y);
      }
      ++n.live;
    }
  }

  void refit_inner(int index) {
    Node& n = nodes_[index];
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    n.live = l.live + r.live;
    if (l.live && r.live) {
      n.min_x = std::min(l.min_x, r.min_x), n.max_x = std::max(l.max_x, r.max_x);
      n.min_y = std::min(l.min_y, r.min_y), n.max_y = std::max(l.max_y, r.max_y);
    } else if (l.live || r.live) {
      const Node& c = l.live ? l : r;
      n.min_x = c.min_x, n.max_x = c.max_x, n.min_y = c.min_y, n.max_y = c.max_y;
    }
  }

  static Wide upper_bound(const Node& n, const Vec& d) {
    const std::int64_t x = d.x >= 0 ? n.max_x : n.min_x;
    const std::int64_t y = d.y >= 0 ? n.max_y : n.min_y;
    return Wide{d.x} * x + Wide{d.y} * y;
  }

  void visit(int index, Search& s) const {
    const Node& n = nodes_[index];
    if (n.live == 0) return;
    const Wide ub = upper_bound(n, s.key.primary);
    if (s.beyond && ub <= s.threshold) return;
    if (s.best >= 0 && ub < dot(s.key.primary, pts_[s.best])) return;
    if (n.left < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        if (!alive_[i]) continue;
        const Point& p = pts_[i];
        if (s.beyond) {
          if (p.id == s.a->id || p.id == s.b->id) continue;
          const Wide c = dot(s.key.primary, p);
          if (c == s.threshold) throw DegenerateInput("center query: point on the query line");
          if (c < s.threshold) continue;
        }
        if (s.best < 0 || s.key.better(p, pts_[s.best])) s.best = i;
      }
      return;
    }
    const Wide ul = upper_bound(nodes_[n.left], s.key.primary);
    const Wide ur = upper_bound(nodes_[n.right], s.key.primary);
    if (ul >= ur) {
      visit(n.left, s);
      visit(n.right, s);
    } else {
      visit(n.right, s);
      visit(n.left, s);
    }
  }

  template <class OnFound>
  void gap(const Point& a, const Point& b, std::vector<Point>& out, OnFound on_found) const {
    const std::optional<Point> z = extreme_beyond(a, b);
    if (!z) return;
    on_found(*z);
    gap(a, *z, out, on_found);
    out.push_back(*z);
    gap(*z, b, out, on_found);
  }

  template <class OnFound>
  std::vector<Point> hull_with(std::optional<Point> anchor, OnFound on_found) const {
    std::vector<Point> out;
    if (live_ == 0) {
      if (anchor) out.push_back(*anchor);
      return out;
    }
    Point first, second;
    if (anchor) {
      first = *anchor;
      const Point any = pts_[any_live()];
      second = *extreme(direction_key(any - first));
    } else {
      first = *extreme(ExtremeKey{{-1, 0}, {0, -1}});
      if (live_ == 1) {
        on_found(first);
        return {first};
      }
      second = *extreme(ExtremeKey{{1, 0}, {0, 1}});
      on_found(first);
    }
    on_found(second);
    out.push_back(first);
    gap(first, second, out, on_found);
    out.push_back(second);
    gap(second, first, out, on_found);
    return out;
  }

  int any_live() const {
    int index = 0;
    while (nodes_[index].left >= 0) {
      index = nodes_[nodes_[index].left].live ? nodes_[index].left : nodes_[index].right;
    }
    for (int i = nodes_[index].begin; i < nodes_[index].end; ++i) {
      if (alive_[i]) return i;
    }
    throw Error("center: no live point");
  }

  std::vector<Point> pts_;
  std::vector<Node> nodes_;
  std::vector<int> slot_of_;
  std::vector<char> alive_;
  std::vector<int> leaf_of_;
  std::size_t live_ = 0;
  mutable std::uint64_t extreme_queries_ = 0;
};

}  // namespace hullpeel
