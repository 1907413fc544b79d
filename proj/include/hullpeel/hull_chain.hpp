#pragma once

// HullChain: the vertices of a convex polygon in clockwise cyclic order, kept
// in a treap keyed implicitly by position. Every node also carries cyclic
// next/prev links so neighbors resolve in O(1). Tangent and extreme queries
// descend the tree once, O(height).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

// Which closed side of the line q->v the whole chain must lie on.
enum class Side { Left, Right };

class HullChain {
 public:
  using Handle = PointId;

  HullChain() = default;
  explicit HullChain(std::span<const Point> clockwise) { assign(clockwise); }

  void assign(std::span<const Point> clockwise) {
    clear();
    if (clockwise.empty()) return;
    root_ = build(clockwise);
    link_run(clockwise);
    const int first = slot(clockwise.front().id);
    const int last = slot(clockwise.back().id);
    nodes_[last].next = first;
    nodes_[first].prev = last;
  }

  void clear() {
    for (const Node& n : nodes_) {
      if (n.live) slot_[n.p.id] = -1;
    }
    nodes_.clear();
    free_.clear();
    root_ = -1;
  }

  std::size_t size() const { return root_ < 0 ? 0 : static_cast<std::size_t>(nodes_[root_].size); }
  bool empty() const { return root_ < 0; }
  bool contains(PointId id) const { return id < slot_.size() && slot_[id] >= 0; }

  const Point& point(Handle h) const { return nodes_[checked_slot(h)].p; }
  Handle next(Handle h) const { return nodes_[nodes_[checked_slot(h)].next].p.id; }
  Handle prev(Handle h) const { return nodes_[nodes_[checked_slot(h)].prev].p.id; }

  // First vertex in the tree's linear order.
  Handle front() const {
    if (empty()) throw Error("front() on empty chain");
    int x = root_;
    while (nodes_[x].left >= 0) x = nodes_[x].left;
    return nodes_[x].p.id;
  }

  std::vector<Point> cycle() const { return empty() ? std::vector<Point>{} : walk(front(), prev(front())); }

  // Clockwise walk from `from` to `to`, both inclusive.
  std::vector<Point> walk(Handle from, Handle to) const {
    std::vector<Point> out;
    int x = checked_slot(from);
    const int end = checked_slot(to);
    for (;;) {
      out.push_back(nodes_[x].p);
      if (x == end) break;
      x = nodes_[x].next;
    }
    return out;
  }

  // Vertex v such that every chain vertex lies on `side` of the line q->v.
  // q must be strictly outside the polygon.
  Handle tangent_from_point(const Point& q, Side side) const {
    if (empty()) throw Error("tangent query on empty chain");
    ++tangent_queries_;
    // Seen from an exterior q all vertices lie in a wedge narrower than pi, so
    // angular order is total and is cyclically unimodal along the boundary.
    const int want = side == Side::Right ? 1 : -1;
    auto less = [&](int a, int b) {
      const int s = orientation_sign(q, nodes_[a].p, nodes_[b].p);
      if (s == 0) throw DegenerateInput("tangent query: collinear with query point");
      return s == want;
    };
    const int v = cyclic_argmax(less);
    if (v < 0) throw PointInsideHull();
    if (size() > 1) {
      const Point& pv = nodes_[v].p;
      for (int nb : {nodes_[v].next, nodes_[v].prev}) {
        if (nb == v) continue;
        const int s = orientation_sign(q, pv, nodes_[nb].p);
        if (s == 0) throw DegenerateInput("tangent query: collinear with query point");
        if (s != -want) throw PointInsideHull();
      }
    }
    return nodes_[v].p.id;
  }

  Handle extreme_vertex(const ExtremeKey& key) const {
    if (empty()) throw Error("extreme query on empty chain");
    ++extreme_queries_;
    return nodes_[cyclic_argmax([&](int a, int b) { return key.better(nodes_[b].p, nodes_[a].p); })].p.id;
  }

  Handle extreme_vertex(const Vec& direction) const {
    if (direction.x == 0 && direction.y == 0) throw Error("extreme query: zero direction");
    return extreme_vertex(direction_key(direction));
  }

  // Removes the clockwise arc from..to (inclusive) and returns it in order.
  std::vector<Point> splice_out(Handle from, Handle to) {
    std::vector<Point> removed = walk(from, to);
    const int f = checked_slot(from), t = checked_slot(to);
    if (removed.size() == size()) {
      clear();
      return removed;
    }
    const int before = nodes_[f].prev, after = nodes_[t].next;
    const int r1 = rank(f), r2 = rank(t);
    if (r1 <= r2) {
      auto [left, rest] = split(root_, r1);
      auto [mid, right] = split(rest, r2 - r1 + 1);
      (void)mid;
      root_ = merge(left, right);
    } else {
      auto [head, rest] = split(root_, r2 + 1);
      auto [mid, tail] = split(rest, r1 - r2 - 1);
      (void)head;
      (void)tail;
      root_ = mid;
    }
    if (root_ >= 0) nodes_[root_].parent = -1;
    nodes_[before].next = after;
    nodes_[after].prev = before;
    for (const Point& p : removed) release(p.id);
    return removed;
  }

  // Inserts `arc` in order between `after` and its clockwise successor.
  void splice_in(Handle after, std::span<const Point> arc) {
    if (arc.empty()) return;
    const int a = checked_slot(after);
    const int succ = nodes_[a].next;
    const int r = rank(a);
    const int block = build(arc);
    link_run(arc);
    const int first = slot(arc.front().id), last = slot(arc.back().id);
    nodes_[a].next = first;
    nodes_[first].prev = a;
    nodes_[last].next = succ;
    nodes_[succ].prev = last;
    auto [left, right] = split(root_, r + 1);
    root_ = merge(merge(left, block), right);
    nodes_[root_].parent = -1;
  }

  int height() const { return height(root_); }

  std::uint64_t tangent_queries() const { return tangent_queries_; }
  std::uint64_t extreme_queries() const { return extreme_queries_; }

  // Structural self-check used by tests: tree order matches the links, sizes,
  // parents and heap priorities are consistent.
  bool structurally_valid() const {
    if (root_ < 0) return true;
    std::vector<int> order;
    if (!collect(root_, -1, order)) return false;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (nodes_[order[i]].next != order[(i + 1) % n]) return false;
      if (nodes_[order[(i + 1) % n]].prev != order[i]) return false;
    }
    return true;
  }

 private:
  struct Node {
    Point p;
    int left = -1, right = -1, parent = -1;
    int size = 1;
    std::uint64_t priority = 0;
    int next = -1, prev = -1;
    bool live = false;
  };

  static std::uint64_t priority_of(PointId id) {
    std::uint64_t z = static_cast<std::uint64_t>(id) + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  int slot(PointId id) const { return id < slot_.size() ? slot_[id] : -1; }

  int checked_slot(PointId id) const {
    const int s = slot(id);
    if (s < 0) throw UnknownPoint(id);
    return s;
  }

  int acquire(const Point& p) {
    if (p.id >= slot_.size()) slot_.resize(static_cast<std::size_t>(p.id) + 1, -1);
    if (slot_[p.id] >= 0) throw Error("point already in chain");
    int s;
    if (!free_.empty()) {
      s = free_.back();
      free_.pop_back();
    } else {
      s = static_cast<int>(nodes_.size());
      nodes_.emplace_back();
    }
    Node& n = nodes_[s];
    n = Node{};
    n.p = p;
    n.priority = priority_of(p.id);
    n.live = true;
    slot_[p.id] = s;
    return s;
  }

  void release(PointId id) {
    const int s = slot_[id];
    nodes_[s].live = false;
    slot_[id] = -1;
    free_.push_back(s);
  }

  int sz(int x) const { return x < 0 ? 0 : nodes_[x].size; }

  void pull(int x) {
    Node& n = nodes_[x];
    n.size = 1 + sz(n.left) + sz(n.right);
    if (n.left >= 0) nodes_[n.left].parent = x;
    if (n.right >= 0) nodes_[n.right].parent = x;
  }

  // Cartesian-tree build over a run in O(k); priorities keep heap order.
  int build(std::span<const Point> run) {
    std::vector<int> stack;
    for (const Point& p : run) {
      const int x = acquire(p);
      int last = -1;
      while (!stack.empty() && nodes_[stack.back()].priority < nodes_[x].priority) {
        last = stack.back();
        pull(last);
        stack.pop_back();
      }
      nodes_[x].left = last;
      if (!stack.empty()) nodes_[stack.back()].right = x;
      stack.push_back(x);
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) pull(*it);
    const int r = stack.front();
    nodes_[r].parent = -1;
    return r;
  }

  void link_run(std::span<const Point> run) {
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
      const int a = slot(run[i].id), b = slot(run[i + 1].id);
      nodes_[a].next = b;
      nodes_[b].prev = a;
    }
  }

  int merge(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (nodes_[a].priority > nodes_[b].priority) {
      nodes_[a].right = merge(nodes_[a].right, b);
      pull(a);
      return a;
    }
    nodes_[b].left = merge(a, nodes_[b].left);
    pull(b);
    return b;
  }

  // First k nodes go left.
  std::pair<int, int> split(int x, int k) {
    if (x < 0) return {-1, -1};
    if (sz(nodes_[x].left) >= k) {
      auto [l, r] = split(nodes_[x].left, k);
      nodes_[x].left = r;
      pull(x);
      if (l >= 0) nodes_[l].parent = -1;
      nodes_[x].parent = -1;
      return {l, x};
    }
    auto [l, r] = split(nodes_[x].right, k - sz(nodes_[x].left) - 1);
    nodes_[x].right = l;
    pull(x);
    if (r >= 0) nodes_[r].parent = -1;
    nodes_[x].parent = -1;
    return {x, r};
  }

  int rank(int x) const {
    int r = sz(nodes_[x].left);
    while (nodes_[x].parent >= 0) {
      const int p = nodes_[x].parent;
      if (nodes_[p].right == x) r += sz(nodes_[p].left) + 1;
      x = p;
    }
    return r;
  }

  // Maximum of a cyclically unimodal sequence (strict order `less` on slots);
  // -1 if the descent falls off the tree.
  template <class Less>
  int cyclic_argmax(Less less) const {
    const std::size_t n = size();
    if (n <= 3) {
      int best = root_;
      int x = nodes_[root_].next;
      for (std::size_t i = 1; i < n; ++i, x = nodes_[x].next) {
        if (less(best, x)) best = x;
      }
      return best;
    }
    int f = root_;
    while (nodes_[f].left >= 0) f = nodes_[f].left;
    const bool up0 = less(f, nodes_[f].next);
    // With the maximum at the first position the rising run wraps around the
    // end of the order and the descent below would overshoot it.
    if (!up0 && less(nodes_[f].prev, f)) return f;
    int x = root_;
    while (x >= 0) {
      const int xp = nodes_[x].prev, xn = nodes_[x].next;
      const bool up = less(x, xn);
      if (!up && less(xp, x)) return x;
      bool go_right;
      if (up0) {
        go_right = up && (x == f || less(f, x));
      } else {
        go_right = up || x == f || less(x, f);
      }
      x = go_right ? nodes_[x].right : nodes_[x].left;
    }
    return -1;  // not unimodal: only possible when a tangent query point is inside
  }

  int height(int x) const { return x < 0 ? 0 : 1 + std::max(height(nodes_[x].left), height(nodes_[x].right)); }

  bool collect(int x, int parent, std::vector<int>& order) const {
    if (x < 0) return true;
    const Node& n = nodes_[x];
    if (n.parent != parent || !n.live) return false;
    if (n.size != 1 + sz(n.left) + sz(n.right)) return false;
    for (int c : {n.left, n.right}) {
      if (c >= 0 && nodes_[c].priority > n.priority) return false;
    }
    if (!collect(n.left, x, order)) return false;
    order.push_back(x);
    return collect(n.right, x, order);
  }

  std::vector<Node> nodes_;
  std::vector<int> free_;
  std::vector<int> slot_;
  int root_ = -1;
  mutable std::uint64_t tangent_queries_ = 0;
  mutable std::uint64_t extreme_queries_ = 0;
};

}  // namespace hullpeel
