#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathoracle/basic_oracle.hpp"
#include "pathoracle/generators.hpp"
#include "pathoracle/graph.hpp"
#include "pathoracle/multilevel.hpp"

namespace pathoracle::tools {

enum class OracleChoice { kDppro, kBasic, kMultilevel, kTilde, kComposed, kExact };

OracleChoice parse_oracle_choice(const std::string& name);
std::string to_string(OracleChoice choice);

inline constexpr int kCsvSchema = 1;
inline constexpr const char* kCsvHeader =
    "index,u,v,reported_length,exact_length,stretch,hops,meet_level,probes,ball_explored";

// Graph comes from a TSV file when `path` is set, otherwise from `spec`.
struct GraphSource {
  std::optional<std::string> path;
  GeneratorSpec spec{GraphModel::kGnm, 4096, 16384, {1, 1}, 0};
};

struct RunConfig {
  GraphSource graph;
  OracleChoice oracle = OracleChoice::kMultilevel;
  int k = 2;
  int h = 2;
  int r = 2;
  std::uint64_t seed = 0;
  SamplingMode sampling = SamplingMode::kUniform;
  std::optional<std::string> spanner_file;
  std::optional<std::string> pairs_file;
  std::size_t queries = 1000;
  std::uint64_t query_seed = 1;
  // Fraction of queries checked against exact Dijkstra; default by graph size.
  std::optional<double> verify;
  std::optional<std::string> save_path;
  std::optional<std::string> load_path;
};

// 1.0 for n <= 4096, otherwise 0.1.
double default_verify_fraction(Vertex n);

struct QueryRow {
  std::size_t index = 0;
  Vertex u = 0;
  Vertex v = 0;
  Weight reported_length = 0;
  std::optional<Weight> exact_length;
  std::optional<double> stretch;
  std::size_t hops = 0;
  int meet_level = 0;
  std::size_t probes = 0;
  std::size_t ball_explored = 0;
  std::size_t ball_tests = 0;
  double bound = 1;  // bound that applies to this answer
};

struct Violation {
  std::size_t index = 0;
  Vertex u = 0;
  Vertex v = 0;
  std::string reason;
};

struct BenchReport {
  RunConfig config;
  Vertex n = 0;
  std::size_t m = 0;
  double lambda = 0;
  double declared_bound = 1;
  std::vector<QueryRow> rows;
  std::vector<Violation> violations;
  // Words per table; keys are stable names.
  std::map<std::string, std::size_t> space;
  std::size_t verified = 0;
  double max_stretch = 1;
  double mean_stretch = 1;
  double p99_stretch = 1;
  std::map<std::size_t, std::size_t> probe_histogram;
  std::map<int, std::size_t> meet_histogram;
  double build_seconds = 0;
  double query_seconds = 0;
};

WeightedGraph load_graph(const GraphSource& source);

// Builds (or loads) the oracle, runs and verifies the workload.
BenchReport run_bench(const RunConfig& config);
// Same, on an already loaded graph.
BenchReport run_bench(const RunConfig& config, std::shared_ptr<const WeightedGraph> graph);

void write_csv(std::ostream& out, const BenchReport& report);
nlohmann::ordered_json summary_json(const BenchReport& report);

struct AuditConfig {
  GraphSource graph;
  OracleChoice oracle = OracleChoice::kMultilevel;  // multilevel, tilde or composed
  int h = 2;
  int r = 2;
  std::uint64_t seed = 0;
  int seeds = 1;
};

struct AuditLevel {
  LevelStats stats;
  std::size_t violations = 0;
};

struct AuditRun {
  std::uint64_t seed = 0;
  std::vector<AuditLevel> levels;
};

struct AuditReport {
  AuditConfig config;
  Vertex n = 0;
  std::size_t m = 0;
  std::vector<AuditRun> runs;
  std::size_t total_violations = 0;
  // Medians over runs of |Branch_1| / (rho_1^4 / rho_2^3) and |Branch_1| / n (h >= 2).
  std::optional<double> median_branch_ratio;
  std::optional<double> median_branch_per_vertex;
};

AuditReport run_audit(const AuditConfig& config);
nlohmann::ordered_json audit_json(const AuditReport& report);

// Shortest decimal that reads back to the same double.
std::string format_number(double x);

}  // namespace pathoracle::tools
