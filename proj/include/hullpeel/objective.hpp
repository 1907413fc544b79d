#pragma once

// Peeling objectives. A hull vertex u with clockwise neighbors t and v and
// active points A(u) = a1..ak has sensitivity
//
//   sens(u) = outer(t, u) + outer(u, v) + sum of chain(e) over the replacement
//             chain t -> a1 -> ... -> ak -> v
//
// which is the amount the objective drops when u is peeled. Every term is an
// exact integer, so single-point edits (ArcEdit) reproduce a from-scratch
// evaluation bit for bit.

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

enum class ObjectiveKind { Area, Perimeter, Count };

// Edge lengths are stored as floor(length * 2^kLengthBits).
inline constexpr int kLengthBits = 32;

inline Measure quantized_length(const Point& a, const Point& b) {
  const Measure dx = Measure(Wide{b.x} - a.x);
  const Measure dy = Measure(Wide{b.y} - a.y);
  const Measure squared = (dx * dx + dy * dy) << (2 * kLengthBits);
  return boost::multiprecision::sqrt(squared);
}

class Objective {
 public:
  static Objective area() { return Objective(ObjectiveKind::Area); }
  static Objective perimeter() { return Objective(ObjectiveKind::Perimeter); }
  static Objective count() { return Objective(ObjectiveKind::Count); }

  static Objective from_name(std::string_view name) {
    if (name == "area") return area();
    if (name == "perimeter") return perimeter();
    if (name == "count") return count();
    throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
  }

  ObjectiveKind kind() const { return kind_; }

  std::string_view name() const {
    switch (kind_) {
      case ObjectiveKind::Area: return "area";
      case ObjectiveKind::Perimeter: return "perimeter";
      case ObjectiveKind::Count: return "count";
    }
    return "";
  }

  // Term for an edge of the current hull that disappears with u.
  Measure outer(const Point& a, const Point& b) const {
    switch (kind_) {
      case ObjectiveKind::Area: return twice_shoelace_term(a, b);
      case ObjectiveKind::Perimeter: return quantized_length(a, b);
      case ObjectiveKind::Count: return 0;
    }
    return 0;
  }

  // Term for an edge a->b of the replacement chain (clockwise direction).
  Measure chain(const Point& a, const Point& b) const {
    switch (kind_) {
      case ObjectiveKind::Area: return twice_shoelace_term(b, a);
      case ObjectiveKind::Perimeter: return -quantized_length(a, b);
      case ObjectiveKind::Count: return 1;
    }
    return 0;
  }

  // The count objective's +1 is carried by the chain's t->v edge, so no
  // separate offset is needed for any kind.
  Measure base_offset() const { return 0; }

  // Converts an internal value to objective units; `unit` is the size of one
  // integer coordinate step.
  double to_real(const Measure& value, double unit) const {
    const double v = value.convert_to<double>();
    switch (kind_) {
      case ObjectiveKind::Area: return v / 2.0 * unit * unit;
      case ObjectiveKind::Perimeter: return std::ldexp(v, -kLengthBits) * unit;
      case ObjectiveKind::Count: return v;
    }
    return v;
  }

  friend bool operator==(const Objective&, const Objective&) = default;

 private:
  explicit Objective(ObjectiveKind kind) : kind_(kind) {}
  ObjectiveKind kind_;
};

// Sensitivity of u from its neighbors and active points, O(1 + |active|).
inline Measure region_sensitivity(const Objective& objective, const Point& t, const Point& u,
                                  const Point& v, std::span<const Point> active) {
  Measure sum = objective.base_offset() + objective.outer(t, u) + objective.outer(u, v);
  const Point* prev = &t;
  for (const Point& a : active) {
    sum += objective.chain(*prev, a);
    prev = &a;
  }
  sum += objective.chain(*prev, v);
  return sum;
}

// One single-point change to an owner's (predecessor, A(u)..., successor) chain.
struct ArcEdit {
  enum class Kind { Insert, Remove, ReplaceSuccessor, ReplacePredecessor };

  Kind kind;
  Point a, b, c;

  // p enters between consecutive chain vertices prev and next.
  static ArcEdit insert(const Point& prev, const Point& p, const Point& next) { return {Kind::Insert, prev, p, next}; }
  // p leaves from between prev and next.
  static ArcEdit remove(const Point& prev, const Point& p, const Point& next) { return {Kind::Remove, prev, p, next}; }
  // The owner's successor changes; `last` is the chain vertex before it.
  static ArcEdit replace_successor(const Point& last, const Point& old_succ, const Point& new_succ) {
    return {Kind::ReplaceSuccessor, last, old_succ, new_succ};
  }
  // The owner's predecessor changes; `first` is the chain vertex after it.
  static ArcEdit replace_predecessor(const Point& old_pred, const Point& new_pred, const Point& first) {
    return {Kind::ReplacePredecessor, old_pred, new_pred, first};
  }
};

// Applies edits one at a time, O(1) each.
inline Measure update_neighbor_sensitivity(const Objective& objective, const Point& owner, Measure sens,
                                           std::span<const ArcEdit> edits) {
  for (const ArcEdit& e : edits) {
    switch (e.kind) {
      case ArcEdit::Kind::Insert:
        sens += objective.chain(e.a, e.b) + objective.chain(e.b, e.c) - objective.chain(e.a, e.c);
        break;
      case ArcEdit::Kind::Remove:
        sens += objective.chain(e.a, e.c) - objective.chain(e.a, e.b) - objective.chain(e.b, e.c);
        break;
      case ArcEdit::Kind::ReplaceSuccessor:
        sens += objective.outer(owner, e.c) - objective.outer(owner, e.b) + objective.chain(e.a, e.c) -
                objective.chain(e.a, e.b);
        break;
      case ArcEdit::Kind::ReplacePredecessor:
        sens += objective.outer(e.b, owner) - objective.outer(e.a, owner) + objective.chain(e.b, e.c) -
                objective.chain(e.a, e.c);
        break;
    }
  }
  return sens;
}

}  // namespace hullpeel
