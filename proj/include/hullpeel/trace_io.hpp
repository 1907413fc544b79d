#pragma once

// JSON trace documents. Requires nlohmann/json (json.hpp) on the include path.

#include <cmath>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "hullpeel/peeler.hpp"
#include "hullpeel/point_io.hpp"

namespace hullpeel {

struct TraceDocument {
  std::string method = "weighted";
  Objective objective = Objective::area();
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  PeelTrace trace;
  double wall_ms = 0;
};

// Size of one internal coordinate step in input units.
inline double internal_unit(const PointFile& input, const CanonicalSet& canonical) {
  return std::ldexp(input.unit(), -canonical.shift);
}

// Event points are reported with their input coordinates, looked up by id.
inline nlohmann::json trace_to_json(const TraceDocument& doc, const PointFile& input, double unit) {
  using nlohmann::json;
  json events = json::array();
  for (const PeelEvent& e : doc.trace.events) {
    const Point& p = input.points.at(e.peeled.id);
    events.push_back({
        {"step", e.step},
        {"point", {{"x", input.real_x(p)}, {"y", input.real_y(p)}, {"id", p.id}}},
        {"sensitivity", doc.objective.to_real(e.sensitivity, unit)},
        {"sensitivity_exact", e.sensitivity.str()},
        {"newly_active", e.newly_active},
        {"l1_size_after", e.l1_size_after},
        {"l2_size_after", e.l2_size_after},
    });
  }
  const PeelStats& s = doc.trace.stats;
  return json{
      {"method", doc.method},
      {"objective", std::string(doc.objective.name())},
      {"seed", doc.seed},
      {"n", doc.n},
      {"k", doc.k},
      {"events", std::move(events)},
      {"stats",
       {{"activations", s.activations},
        {"tangent_queries", s.tangent_queries},
        {"extreme_queries", s.extreme_queries},
        {"restore_calls", s.restore_calls},
        {"restore_query_mismatches", s.restore_query_mismatches},
        {"wall_ms", doc.wall_ms}}},
      {"terminated", doc.trace.terminated},
  };
}

}  // namespace hullpeel
