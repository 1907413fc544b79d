// hullpeel: peel, generate, bench and compare from the command line.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullpeel/baselines.hpp"
#include "hullpeel/generators.hpp"
#include "hullpeel/oracles.hpp"
#include "hullpeel/peeler.hpp"
#include "hullpeel/point_io.hpp"
#include "hullpeel/svg.hpp"
#include "hullpeel/trace_io.hpp"

namespace {

using namespace hullpeel;
using nlohmann::json;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kOracleMismatch = 3, kInvariant = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return parse_points(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<PointId> read_planted(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json meta;
  try {
    meta = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  return meta.at("planted").get<std::vector<PointId>>();
}

// --- peel -------------------------------------------------------------------

struct PeelArgs {
  std::string input;
  std::optional<std::size_t> k;
  std::string objective = "area";
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string svg_path;
  bool check_oracle = false;
};

int cmd_peel(const PeelArgs& a) {
  const Objective objective = Objective::from_name(a.objective);
  const PointFile input = read_point_file(a.input);
  if (a.check_oracle && input.points.size() > 64) throw UsageError("--check-oracle supports at most 64 points");
  const std::size_t k = a.k.value_or(input.points.size());

  PeelOptions options;
  options.capture_regions = !a.svg_path.empty();
  const auto start = std::chrono::steady_clock::now();
  PeelResult result = peel_with_retry(input.points, objective, k, a.seed, options);
  const double wall = elapsed_ms(start);

  TraceDocument doc;
  doc.objective = objective;
  doc.seed = a.seed;
  doc.n = input.points.size();
  doc.k = k;
  doc.trace = std::move(result.trace);
  doc.wall_ms = wall;
  const std::string text = trace_to_json(doc, input, internal_unit(input, result.input)).dump(2) + "\n";
  if (a.trace_path.empty()) {
    std::cout << text;
  } else {
    write_text(a.trace_path, text);
  }

  if (!a.svg_path.empty()) {
    const LayerSet layers = convex_layers(result.input.points, 50);
    write_text(a.svg_path, render_svg(result.input.points, layers, doc.trace.events));
  }

  if (a.check_oracle) {
    const OracleTrace slow = naive_weighted_peel(result.input.points, objective, k);
    const auto& fast = doc.trace.events;
    for (std::size_t i = 0; i < std::max(fast.size(), slow.events.size()); ++i) {
      if (i >= fast.size() || i >= slow.events.size() || !fast[i].same_outcome(slow.events[i])) {
        std::cerr << "oracle mismatch at step " << i + 1 << "\n";
        return kOracleMismatch;
      }
    }
    if (slow.activations != doc.trace.stats.activations) {
      std::cerr << "oracle mismatch in activation count\n";
      return kOracleMismatch;
    }
    std::cerr << "oracle check passed (" << fast.size() << " steps)\n";
  }
  return kOk;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 1000;
  std::optional<std::size_t> outliers;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  std::size_t outliers = a.outliers.value_or(0);
  if (!a.outliers) {
    if (a.kind == "fig2") outliers = 2;
    if (a.kind == "fig3") outliers = 3;
  }
  GeneratedInstance g;
  try {
    g = generate(a.kind, a.n, outliers, a.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text(a.out, serialize_points(g.file));
  const json meta{{"kind", g.kind},   {"n", g.n},
                  {"outliers", g.outliers}, {"seed", g.seed},
                  {"count", g.file.points.size()}, {"planted", g.planted}};
  write_text(a.out + ".meta.json", meta.dump(2) + "\n");
  return kOk;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> sizes;
  std::uint64_t seed = 1;
  std::string objective = "area";
  std::size_t repeat = 1;
  std::string report;
};

std::size_t parse_size(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 3 || v != std::floor(v)) throw UsageError("invalid size '" + s + "'");
  return static_cast<std::size_t>(v);
}

int cmd_bench(const BenchArgs& a) {
  const Objective objective = Objective::from_name(a.objective);
  if (a.repeat == 0) throw UsageError("--repeat must be positive");
  std::vector<std::size_t> sizes;
  for (const std::string& s : a.sizes) sizes.push_back(parse_size(s));
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw UsageError("--sizes must be ascending");

  json rows = json::array();
  std::vector<double> best;
  bool bound_ok = true;
  for (std::size_t n : sizes) {
    const GeneratedInstance g = generate_disk(n, a.seed);
    std::vector<double> times;
    PeelStats stats;
    for (std::size_t r = 0; r < a.repeat; ++r) {
      const auto start = std::chrono::steady_clock::now();
      PeelResult result = peel_with_retry(g.file.points, objective, kPeelAll, a.seed);
      times.push_back(elapsed_ms(start));
      stats = result.trace.stats;
    }
    double mean = 0;
    for (double t : times) mean += t;
    mean /= static_cast<double>(times.size());
    double var = 0;
    for (double t : times) var += (t - mean) * (t - mean);
    const double cv = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) / mean : 0.0;
    const double fastest = *std::min_element(times.begin(), times.end());
    best.push_back(fastest);
    const bool ok = stats.activations <= 3 * n;
    bound_ok = bound_ok && ok;
    rows.push_back({{"n", n},
                    {"times_ms", times},
                    {"mean_ms", mean},
                    {"min_ms", fastest},
                    {"cv", cv},
                    {"activations", stats.activations},
                    {"activations_within_3n", ok},
                    {"tangent_queries", stats.tangent_queries},
                    {"extreme_queries", stats.extreme_queries},
                    {"restore_calls", stats.restore_calls},
                    {"restore_query_mismatches", stats.restore_query_mismatches}});
    std::cout << "n=" << n << " min_ms=" << fastest << " mean_ms=" << mean << " cv=" << cv
              << " activations=" << stats.activations << (ok ? "" : " (exceeds 3n)") << "\n";
  }
  json ratios = json::array();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    const double tr = best[i] / best[i - 1];
    ratios.push_back({{"from", sizes[i - 1]},
                      {"to", sizes[i]},
                      {"size_ratio", static_cast<double>(sizes[i]) / static_cast<double>(sizes[i - 1])},
                      {"time_ratio", tr}});
    std::cout << "time(" << sizes[i] << ")/time(" << sizes[i - 1] << ") = " << tr << "\n";
  }
  const json report{{"objective", std::string(objective.name())}, {"seed", a.seed}, {"repeat", a.repeat},
                    {"sizes", rows}, {"ratios", ratios}};
  if (!a.report.empty()) write_text(a.report, report.dump(2) + "\n");
  return bound_ok ? kOk : kInvariant;
}

// --- compare ----------------------------------------------------------------

struct CompareArgs {
  std::string input;
  std::size_t k = 0;
  std::vector<std::string> methods{"weighted", "distance", "layer", "exact"};
  std::string metric = "euclidean";
  std::string planted_path;
  std::uint64_t seed = 0;
  std::string report;
};

int cmd_compare(const CompareArgs& a) {
  static const std::set<std::string> known{"weighted", "distance", "layer", "exact"};
  for (const std::string& m : a.methods) {
    if (!known.count(m)) throw UsageError("unknown method '" + m + "'");
  }
  DistanceMetric metric;
  try {
    metric = metric_from_name(a.metric);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PointFile input = read_point_file(a.input);
  std::optional<std::set<PointId>> planted;
  std::string planted_path = a.planted_path;
  if (planted_path.empty() && std::filesystem::exists(a.input + ".meta.json")) planted_path = a.input + ".meta.json";
  if (!planted_path.empty()) {
    const std::vector<PointId> ids = read_planted(planted_path);
    planted.emplace(ids.begin(), ids.end());
  }
  const CanonicalSet canon = canonicalize(input.points, a.seed);
  if (a.k > canon.points.size()) throw UsageError("--k exceeds the number of points");
  const double unit = internal_unit(input, canon);

  auto remaining_area = [&](const std::vector<PointId>& removed) {
    const std::set<PointId> gone(removed.begin(), removed.end());
    std::vector<Point> rest;
    for (const Point& p : canon.points) {
      if (!gone.count(p.id)) rest.push_back(p);
    }
    return rest.size() < 3 ? Measure(0) : twice_polygon_area(convex_hull(rest));
  };
  auto row = [&](const std::string& method, const std::vector<PointId>& removed, const Measure& twice_area) {
    json r{{"method", method},
           {"removed", removed},
           {"remaining_area", Objective::area().to_real(twice_area, unit)},
           {"remaining_area_exact", twice_area.str()}};
    if (planted && !planted->empty()) {
      std::size_t hit = 0;
      for (PointId id : removed) hit += planted->count(id);
      r["recall"] = static_cast<double>(hit) / static_cast<double>(planted->size());
    } else {
      r["recall"] = nullptr;
    }
    return r;
  };

  json rows = json::array();
  for (const std::string& m : a.methods) {
    std::vector<PointId> removed;
    if (m == "weighted") {
      const PeelTrace t = run(canon.points, Objective::area(), a.k);
      for (const PeelEvent& e : t.events) removed.push_back(e.peeled.id);
    } else if (m == "distance") {
      for (const Point& p : distance_peel(canon.points, metric, a.k).removed) removed.push_back(p.id);
    } else if (m == "layer") {
      for (const Point& p : layer_peel(canon.points, a.k).removed) removed.push_back(p.id);
    } else {
      try {
        const KPeelResult r = exact_k_peel(canon.points, a.k);
        rows.push_back(row(m, r.removed, r.twice_area));
      } catch (const InstanceTooLarge& e) {
        rows.push_back({{"method", m}, {"skipped", e.what()}});
      }
      continue;
    }
    rows.push_back(row(m, removed, remaining_area(removed)));
  }
  const json report{{"input", a.input}, {"n", input.points.size()}, {"k", a.k}, {"methods", rows}};
  const std::string text = report.dump(2) + "\n";
  if (a.report.empty()) {
    std::cout << text;
  } else {
    write_text(a.report, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted convex hull peeling"};
  app.require_subcommand(1);

  PeelArgs peel;
  auto* p = app.add_subcommand("peel", "Peel points from a CSV file and write a JSON trace");
  p->add_option("input", peel.input, "CSV point file")->required();
  p->add_option("--k", peel.k, "Number of points to peel (default: all)");
  p->add_option("--objective", peel.objective, "area, perimeter or count")
      ->check(CLI::IsMember({"area", "perimeter", "count"}));
  p->add_option("--seed", peel.seed, "Seed for the general-position perturbation");
  p->add_option("--trace", peel.trace_path, "Trace output path (default: stdout)");
  p->add_option("--svg", peel.svg_path, "SVG figure output path");
  p->add_flag("--check-oracle", peel.check_oracle, "Compare against the naive oracle (n <= 64)");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a seeded instance and its metadata sidecar");
  g->add_option("kind", gen.kind, "disk, fig2, fig3 or grid")->required();
  g->add_option("out", gen.out, "Output CSV path")->required();
  g->add_option("--n", gen.n, "Number of base points");
  g->add_option("--outliers", gen.outliers, "fig2: outlier pairs, fig3: shielded spikes");
  g->add_option("--seed", gen.seed, "Random seed");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time full peels of disk instances");
  b->add_option("--sizes", bench.sizes, "Ascending instance sizes, e.g. 1e5,2e5")->required()->delimiter(',');
  b->add_option("--seed", bench.seed, "Random seed");
  b->add_option("--objective", bench.objective, "area, perimeter or count")
      ->check(CLI::IsMember({"area", "perimeter", "count"}));
  b->add_option("--repeat", bench.repeat, "Runs per size");
  b->add_option("--report", bench.report, "JSON report path");

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "Compare peeling methods on one instance");
  c->add_option("input", cmp.input, "CSV point file")->required();
  c->add_option("--k", cmp.k, "Points removed per method")->required();
  c->add_option("--methods", cmp.methods, "weighted,distance,layer,exact")->delimiter(',');
  c->add_option("--metric", cmp.metric, "Distance baseline metric");
  c->add_option("--planted", cmp.planted_path, "Metadata sidecar with planted ids");
  c->add_option("--seed", cmp.seed, "Seed for the general-position perturbation");
  c->add_option("--report", cmp.report, "JSON report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*p) return cmd_peel(peel);
    if (*g) return cmd_generate(gen);
    if (*b) return cmd_bench(bench);
    if (*c) return cmd_compare(cmp);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kParse;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const TooFewPoints& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const CoordinateRange& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
