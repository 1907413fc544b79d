#pragma once

// Weighted convex hull peeling in O(n log n).
//
// The first two convex layers are kept as HullChains (L1, L2); everything
// deeper lives in a CenterHull. Each L1 vertex u owns an active arc A(u): the
// contiguous run of L2 vertices that would join L1 if u were peeled, found
// with two tangent queries from u's neighbors. Peeling u promotes A(u) into
// L1, refills L2 from the center with 2k+1 extreme queries, scores the
// promoted vertices from scratch and patches the two neighbors' scores with
// single-point edits.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/heap/d_ary_heap.hpp>

#include "hullpeel/canonicalize.hpp"
#include "hullpeel/center_hull.hpp"
#include "hullpeel/convex_hull.hpp"
#include "hullpeel/hull_chain.hpp"
#include "hullpeel/objective.hpp"

namespace hullpeel {

struct ActiveArc {
  PointId start = 0;
  PointId end = 0;
  std::uint32_t count = 0;

  bool empty() const { return count == 0; }
};

struct PeelEvent {
  std::size_t step = 0;
  Point peeled;
  Measure sensitivity = 0;
  std::uint64_t newly_active = 0;
  std::size_t l1_size_after = 0;
  std::size_t l2_size_after = 0;
  // Boundary of the removed region (t, u, v, then A(u) reversed); filled only
  // when PeelOptions::capture_regions is set.
  std::vector<PointId> region;

  bool same_outcome(const PeelEvent& o) const {
    return step == o.step && peeled == o.peeled && sensitivity == o.sensitivity &&
           newly_active == o.newly_active && l1_size_after == o.l1_size_after &&
           l2_size_after == o.l2_size_after;
  }
};

struct PeelOptions {
  bool capture_regions = false;
  bool record_queue_sizes = false;
};

struct PeelStats {
  std::uint64_t activations = 0;
  std::uint64_t tangent_queries = 0;
  std::uint64_t extreme_queries = 0;
  std::uint64_t restore_calls = 0;
  std::uint64_t restore_points = 0;
  std::uint64_t restore_queries = 0;
  // Calls whose query count differed from 2k+1.
  std::uint64_t restore_query_mismatches = 0;
  std::vector<std::size_t> queue_sizes;
};

class PeelState {
 public:
  PeelState(std::span<const Point> points, Objective objective, PeelOptions options = {})
      : objective_(objective), options_(options) {
    if (points.size() < 3) throw TooFewPoints(points.size());
    PointId max_id = 0;
    for (const Point& p : points) max_id = std::max(max_id, p.id);
    const std::size_t slots = static_cast<std::size_t>(max_id) + 1;
    arc_.assign(slots, ActiveArc{});
    sens_.assign(slots, Measure(0));
    handle_.resize(slots);
    queued_.assign(slots, 0);

    std::vector<Point> rest(points.begin(), points.end());
    std::sort(rest.begin(), rest.end(), detail::xy_less);
    const std::vector<Point> outer = detail::hull_of_sorted(rest);
    std::vector<char> taken(slots, 0);
    for (const Point& p : outer) taken[p.id] = 1;
    std::erase_if(rest, [&](const Point& p) { return taken[p.id] != 0; });
    const std::vector<Point> second = detail::hull_of_sorted(rest);
    for (const Point& p : second) taken[p.id] = 1;
    std::erase_if(rest, [&](const Point& p) { return taken[p.id] != 0; });

    l1_.assign(outer);
    l2_.assign(second);
    center_ = CenterHull(rest);

    for (const Point& u : outer) {
      const ActiveArc arc = locate_arc(l1_.point(l1_.prev(u.id)), l1_.point(l1_.next(u.id)));
      arc_[u.id] = arc;
      stats_.activations += arc.count;
      push(u.id, score(u.id));
    }
  }

  std::size_t remaining() const { return l1_.size() + l2_.size() + center_.live_count(); }
  bool done() const { return remaining() < 3; }

  PeelEvent peel_next() {
    if (done() || heap_.empty()) throw EmptyQueue();
    const PointId u = heap_.top().id;
    const Measure sens_u = heap_.top().sens;
    heap_.pop();
    queued_[u] = 0;

    const PointId t = l1_.prev(u), v = l1_.next(u);
    const Point pu = l1_.point(u), pt = l1_.point(t), pv = l1_.point(v);
    const ActiveArc arc_u = arc_[u];
    const std::vector<Point> promoted = arc_u.empty() ? std::vector<Point>{} : l2_.walk(arc_u.start, arc_u.end);

    PeelEvent event;
    event.step = ++steps_;
    event.peeled = pu;
    event.sensitivity = sens_u;
    peeled_point_ = pu;
    if (options_.capture_regions) {
      event.region = {t, u, v};
      for (auto it = promoted.rbegin(); it != promoted.rend(); ++it) event.region.push_back(it->id);
    }

    // Neighbor bookkeeping that refers to L2 vertices about to move.
    const SideSnapshot succ_side = snapshot_successor_side(t, promoted);
    const SideSnapshot pred_side = snapshot_predecessor_side(v, promoted);

    l1_.splice_out(u, u);
    arc_[u] = ActiveArc{};
    if (!promoted.empty()) {
      l1_.splice_in(t, promoted);
      restore_second_layer(arc_u, promoted.size());
    }

    std::uint64_t delta = 0;
    if (l1_.size() >= 3) {
      for (const Point& w : promoted) {
        const ActiveArc arc = locate_arc(l1_.point(l1_.prev(w.id)), l1_.point(l1_.next(w.id)));
        arc_[w.id] = arc;
        delta += arc.count;
        push(w.id, score(w.id));
      }
      delta += update_successor_side(t, pt, succ_side, promoted.empty() ? pv : promoted.front());
      delta += update_predecessor_side(v, pv, pred_side, promoted.empty() ? pt : promoted.back());
    }
    if (done()) {
      heap_.clear();
      std::fill(queued_.begin(), queued_.end(), 0);
    }
    stats_.activations += delta;
    event.newly_active = delta;
    event.l1_size_after = l1_.size();
    event.l2_size_after = l2_.size();
    if (options_.record_queue_sizes) stats_.queue_sizes.push_back(heap_.size());
    return event;
  }

  // Read-only views used by tests, oracles and rendering.
  const Objective& objective() const { return objective_; }
  const HullChain& first_layer() const { return l1_; }
  const HullChain& second_layer() const { return l2_; }
  const CenterHull& center() const { return center_; }

  const ActiveArc& arc(PointId u) const { return arc_.at(u); }

  std::vector<Point> active_points(PointId u) const {
    const ActiveArc& a = arc_.at(u);
    return a.empty() ? std::vector<Point>{} : l2_.walk(a.start, a.end);
  }

  // Maintained (possibly incrementally updated) sensitivity of an L1 vertex.
  std::optional<Measure> sensitivity(PointId u) const {
    if (u >= queued_.size() || !queued_[u]) return std::nullopt;
    return sens_[u];
  }

  // Recomputes A(u) with fresh tangent queries and scores it from scratch.
  Measure compute_sensitivity(PointId u) const {
    const Point pt = l1_.point(l1_.prev(u)), pv = l1_.point(l1_.next(u));
    const ActiveArc a = locate_arc(pt, pv);
    const std::vector<Point> active = a.empty() ? std::vector<Point>{} : l2_.walk(a.start, a.end);
    return region_sensitivity(objective_, pt, l1_.point(u), pv, active);
  }

  // A(u) from fresh tangent queries, ignoring the maintained arc.
  std::vector<Point> find_active(PointId u) const {
    const ActiveArc a = locate_arc(l1_.point(l1_.prev(u)), l1_.point(l1_.next(u)));
    return a.empty() ? std::vector<Point>{} : l2_.walk(a.start, a.end);
  }

  std::vector<PointId> queued_ids() const {
    std::vector<PointId> out;
    for (std::size_t i = 0; i < queued_.size(); ++i) {
      if (queued_[i]) out.push_back(static_cast<PointId>(i));
    }
    return out;
  }

  std::vector<Point> remaining_points() const {
    std::vector<Point> out = l1_.cycle();
    const std::vector<Point> second = l2_.cycle();
    out.insert(out.end(), second.begin(), second.end());
    const std::vector<Point> inner = center_.live_points();
    out.insert(out.end(), inner.begin(), inner.end());
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
    return out;
  }

  PeelStats stats() const {
    PeelStats s = stats_;
    s.tangent_queries = l1_.tangent_queries() + l2_.tangent_queries();
    s.extreme_queries = center_.extreme_queries() + l1_.extreme_queries() + l2_.extreme_queries();
    return s;
  }

 private:
  struct QueueEntry {
    Measure sens;
    PointId id;
  };
  struct EntryLess {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
      if (a.sens != b.sens) return a.sens < b.sens;
      return a.id > b.id;
    }
  };
  using Heap = boost::heap::d_ary_heap<QueueEntry, boost::heap::arity<4>, boost::heap::mutable_<true>,
                                       boost::heap::compare<EntryLess>>;

  // What a neighbor of the peeled vertex owned before the peel.
  struct SideSnapshot {
    Point fixed;          // neighbor on the far side (unchanged by the peel)
    ActiveArc kept;       // old arc minus a point shared with A(u)
    bool shared = false;  // whether one point moved from the old arc to L1
    Point shared_point;
    Point shared_other;   // chain vertex adjacent to the shared point on the kept side
  };

  void push(PointId id, const Measure& sens) {
    sens_[id] = sens;
    handle_[id] = heap_.push(QueueEntry{sens, id});
    queued_[id] = 1;
  }

  void reprioritize(PointId id, const Measure& sens) {
    if (!queued_[id]) throw InvariantViolation("updating a vertex that is not queued");
    sens_[id] = sens;
    heap_.update(handle_[id], QueueEntry{sens, id});
  }

  Measure score(PointId u) const {
    return region_sensitivity(objective_, l1_.point(l1_.prev(u)), l1_.point(u), l1_.point(l1_.next(u)),
                              active_points(u));
  }

  // Arc of L2 on hull(L1 - u + L2) strictly between t and v, i.e. A(u).
  ActiveArc locate_arc(const Point& t, const Point& v) const {
    if (l2_.empty()) return {};
    const PointId far = l2_.extreme_vertex(direction_key(perp_left(v - t)));
    const int side = orientation_sign(t, v, l2_.point(far));
    if (side == 0) throw DegenerateInput("active arc: L2 vertex on a chord of L1");
    if (side < 0) return {};
    const PointId s = l2_.tangent_from_point(t, Side::Right);
    const PointId e = l2_.tangent_from_point(v, Side::Left);
    std::uint32_t count = 1;
    for (PointId x = s; x != e; x = l2_.next(x)) ++count;
    return {s, e, count};
  }

  SideSnapshot snapshot_successor_side(PointId t, const std::vector<Point>& promoted) const {
    SideSnapshot snap;
    snap.fixed = l1_.point(l1_.prev(t));
    snap.kept = arc_[t];
    if (!snap.kept.empty() && !promoted.empty() && snap.kept.end == promoted.front().id) {
      snap.shared = true;
      snap.shared_point = promoted.front();
      snap.shared_other = snap.kept.count >= 2 ? l2_.point(l2_.prev(snap.kept.end)) : snap.fixed;
      if (--snap.kept.count > 0) snap.kept.end = snap.shared_other.id;
    }
    return snap;
  }

  SideSnapshot snapshot_predecessor_side(PointId v, const std::vector<Point>& promoted) const {
    SideSnapshot snap;
    snap.fixed = l1_.point(l1_.next(v));
    snap.kept = arc_[v];
    if (!snap.kept.empty() && !promoted.empty() && snap.kept.start == promoted.back().id) {
      snap.shared = true;
      snap.shared_point = promoted.back();
      snap.shared_other = snap.kept.count >= 2 ? l2_.point(l2_.next(snap.kept.start)) : snap.fixed;
      if (--snap.kept.count > 0) snap.kept.start = snap.shared_other.id;
    }
    return snap;
  }

  // t lost its clockwise neighbor u; new_succ replaces it.
  std::uint64_t update_successor_side(PointId t, const Point& pt, const SideSnapshot& snap, const Point& new_succ) {
    std::vector<ArcEdit> edits;
    const Point u = peeled_point_;
    if (snap.shared) edits.push_back(ArcEdit::remove(snap.shared_other, snap.shared_point, u));
    Point last = snap.kept.empty() ? snap.fixed : l2_.point(snap.kept.end);
    edits.push_back(ArcEdit::replace_successor(last, u, new_succ));

    const ActiveArc fresh = locate_arc(snap.fixed, new_succ);
    if (fresh.count < snap.kept.count) throw InvariantViolation("active arc shrank beyond the shared point");
    if (!snap.kept.empty() && fresh.start != snap.kept.start) {
      throw InvariantViolation("active arc start moved on the successor side");
    }
    const std::uint32_t added = fresh.count - snap.kept.count;
    if (added > 0) {
      PointId x = snap.kept.empty() ? fresh.start : l2_.next(snap.kept.end);
      for (std::uint32_t i = 0; i < added; ++i, x = l2_.next(x)) {
        const Point px = l2_.point(x);
        edits.push_back(ArcEdit::insert(last, px, new_succ));
        last = px;
      }
    }
    arc_[t] = fresh;
    reprioritize(t, update_neighbor_sensitivity(objective_, pt, sens_[t], edits));
    return added;
  }

  // v lost its counterclockwise neighbor u; new_pred replaces it.
  std::uint64_t update_predecessor_side(PointId v, const Point& pv, const SideSnapshot& snap, const Point& new_pred) {
    std::vector<ArcEdit> edits;
    const Point u = peeled_point_;
    if (snap.shared) edits.push_back(ArcEdit::remove(u, snap.shared_point, snap.shared_other));
    const Point first = snap.kept.empty() ? snap.fixed : l2_.point(snap.kept.start);
    edits.push_back(ArcEdit::replace_predecessor(u, new_pred, first));

    const ActiveArc fresh = locate_arc(new_pred, snap.fixed);
    if (fresh.count < snap.kept.count) throw InvariantViolation("active arc shrank beyond the shared point");
    if (!snap.kept.empty() && fresh.end != snap.kept.end) {
      throw InvariantViolation("active arc end moved on the predecessor side");
    }
    const std::uint32_t added = fresh.count - snap.kept.count;
    Point prev = new_pred;
    PointId x = fresh.start;
    for (std::uint32_t i = 0; i < added; ++i, x = l2_.next(x)) {
      const Point px = l2_.point(x);
      edits.push_back(ArcEdit::insert(prev, px, first));
      prev = px;
    }
    arc_[v] = fresh;
    reprioritize(v, update_neighbor_sensitivity(objective_, pv, sens_[v], edits));
    return added;
  }

  // A(u) = arc left L2; close the gap between its flanking vertices.
  void restore_second_layer(const ActiveArc& removed, std::size_t count) {
    // Flanking vertices are read before the arc leaves the chain.
    const bool partial = l2_.size() > count;
    const PointId a = partial ? l2_.prev(removed.start) : 0;
    const PointId b = partial ? l2_.next(removed.end) : 0;
    const std::size_t left = l2_.size() - count;
    l2_.splice_out(removed.start, removed.end);
    if (left >= 2) {
      const std::uint64_t before = center_.extreme_queries();
      const std::vector<Point> fill = center_.restore_gap(l2_.point(a), l2_.point(b));
      const std::uint64_t used = center_.extreme_queries() - before;
      ++stats_.restore_calls;
      stats_.restore_points += fill.size();
      stats_.restore_queries += used;
      if (used != 2 * fill.size() + 1) ++stats_.restore_query_mismatches;
      l2_.splice_in(a, fill);
      return;
    }
    std::optional<Point> anchor;
    if (left == 1) anchor = l2_.point(a);
    l2_.assign(center_.extract_hull(anchor));
  }

  Objective objective_;
  PeelOptions options_;
  HullChain l1_, l2_;
  CenterHull center_;
  std::vector<ActiveArc> arc_;
  std::vector<Measure> sens_;
  std::vector<Heap::handle_type> handle_;
  std::vector<char> queued_;
  Heap heap_;
  PeelStats stats_;
  std::size_t steps_ = 0;
  Point peeled_point_;
};

struct PeelTrace {
  std::vector<PeelEvent> events;
  PeelStats stats;
  // Set when peeling stopped because fewer than three points remained.
  bool terminated = false;
};

inline constexpr std::size_t kPeelAll = static_cast<std::size_t>(-1);

// Peels up to k points from a canonical (deduplicated, general position) set.
inline PeelTrace run(std::span<const Point> points, Objective objective, std::size_t k = kPeelAll,
                     PeelOptions options = {}) {
  PeelState state(points, objective, options);
  PeelTrace trace;
  while (trace.events.size() < k && !state.done()) trace.events.push_back(state.peel_next());
  trace.terminated = state.done();
  trace.stats = state.stats();
  return trace;
}

struct PeelResult {
  CanonicalSet input;
  PeelTrace trace;
  int attempts = 1;
};

// Canonicalizes raw input and peels it. A collinear triple surfacing during
// peeling (possible only above the exhaustive check limit) triggers a fresh
// perturbation.
inline PeelResult peel_with_retry(std::span<const Point> raw, Objective objective, std::size_t k,
                                  std::uint64_t seed, PeelOptions options = {}, int max_attempts = 8) {
  CanonicalizeOptions copts;
  for (int attempt = 0;; ++attempt) {
    copts.force_attempt = attempt;
    PeelResult result;
    result.input = canonicalize(raw, seed, copts);
    result.attempts = attempt + 1;
    try {
      result.trace = run(result.input.points, objective, k, options);
      return result;
    } catch (const DegenerateInput&) {
      if (attempt + 1 >= max_attempts) throw;
    }
  }
}

}  // namespace hullpeel
