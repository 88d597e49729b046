#include "pathoracle_tools/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pathoracle/dppro.hpp"
#include "pathoracle/errors.hpp"
#include "pathoracle/graph_io.hpp"
#include "pathoracle/hashing.hpp"
#include "pathoracle/parallel.hpp"
#include "pathoracle/serialization.hpp"
#include "pathoracle/shortest_paths.hpp"
#include "pathoracle/spanner.hpp"

namespace pathoracle::tools {

OracleChoice parse_oracle_choice(const std::string& name) {
  if (name == "dppro") return OracleChoice::kDppro;
  if (name == "basic") return OracleChoice::kBasic;
  if (name == "multilevel") return OracleChoice::kMultilevel;
  if (name == "tilde") return OracleChoice::kTilde;
  if (name == "composed") return OracleChoice::kComposed;
  if (name == "exact" || name == "exact-baseline") return OracleChoice::kExact;
  throw ParameterError("unknown oracle kind '" + name + "'");
}

std::string to_string(OracleChoice choice) {
  switch (choice) {
    case OracleChoice::kDppro: return "dppro";
    case OracleChoice::kBasic: return "basic";
    case OracleChoice::kMultilevel: return "multilevel";
    case OracleChoice::kTilde: return "tilde";
    case OracleChoice::kComposed: return "composed";
    case OracleChoice::kExact: return "exact-baseline";
  }
  return "unknown";
}

double default_verify_fraction(Vertex n) { return n <= 4096 ? 1.0 : 0.1; }

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

WeightedGraph load_graph(const GraphSource& source) {
  if (source.path) return read_graph_file(*source.path, source.spec.seed);
  return generate_graph(source.spec);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class OracleHandle {
 public:
  virtual ~OracleHandle() = default;
  virtual OracleAnswer query(Vertex u, Vertex v) const = 0;
  virtual double declared_bound() const = 0;
  virtual double answer_bound(const OracleAnswer& a) const = 0;
  virtual std::map<std::string, std::size_t> space() const = 0;
  virtual void save(std::ostream& out) const = 0;
};

class DpproHandle final : public OracleHandle {
 public:
  explicit DpproHandle(Dppro o) : o_(std::move(o)) {}
  OracleAnswer query(Vertex u, Vertex v) const override {
    OracleAnswer a;
    a.walk = u == v ? PathWalk(u) : o_.query(u, v, &a.probes);
    a.reported_length = a.walk.length();
    return a;
  }
  double declared_bound() const override { return 1; }
  double answer_bound(const OracleAnswer&) const override { return 1; }
  std::map<std::string, std::size_t> space() const override {
    const DpproSpace s = o_.space_report();
    return {{"home_words", s.n_words},
            {"branch_words", s.branch_words},
            {"pair_words", s.pair_words},
            {"event_count", s.event_count},
            {"pair_count", s.pair_count},
            {"total_words", s.total_words()}};
  }
  void save(std::ostream& out) const override { save_oracle(out, OracleKind::kDppro, o_); }

 private:
  Dppro o_;
};

class BasicHandle final : public OracleHandle {
 public:
  explicit BasicHandle(BasicOracle o) : o_(std::move(o)) {}
  OracleAnswer query(Vertex u, Vertex v) const override { return o_.query(u, v); }
  double declared_bound() const override { return o_.stretch_bound(); }
  double answer_bound(const OracleAnswer& a) const override { return a.meet_level == 0 ? 1 : o_.stretch_bound(); }
  std::map<std::string, std::size_t> space() const override {
    const BasicSpace s = o_.space_report();
    return {{"forest_words", s.forest_words},
            {"tz_words", s.tz_words},
            {"dppro_words", s.dppro_words},
            {"landmarks", s.landmark_count},
            {"spanner_pairs", s.spanner_pairs},
            {"linear_regime", s.linear_regime ? 1u : 0u},
            {"total_words", s.total_words()}};
  }
  void save(std::ostream& out) const override { save_oracle(out, OracleKind::kBasic, o_); }

 private:
  BasicOracle o_;
};

std::map<std::string, std::size_t> multilevel_space(const MultiLevelOracle& o) {
  const MultiLevelSpace s = o.space_report();
  std::map<std::string, std::size_t> out{{"forest_words", s.forest_words},
                                         {"dppro_words", s.dppro_words},
                                         {"total_words", s.total_words()}};
  for (const LevelStats& l : o.level_stats()) {
    const std::string prefix = "level_" + std::to_string(l.level) + "_";
    out[prefix + "landmarks"] = l.landmarks;
    out[prefix + "pairs"] = l.pairs;
    out[prefix + "branch_events"] = l.branch_events;
    out[prefix + "dppro_words"] = l.dppro_words;
  }
  return out;
}

class MultiLevelHandle final : public OracleHandle {
 public:
  MultiLevelHandle(MultiLevelOracle o, OracleKind kind) : o_(std::move(o)), kind_(kind) {}
  OracleAnswer query(Vertex u, Vertex v) const override { return o_.query(u, v); }
  double declared_bound() const override { return o_.stretch_bound(); }
  double answer_bound(const OracleAnswer& a) const override { return level_stretch_bound(a.meet_level); }
  std::map<std::string, std::size_t> space() const override { return multilevel_space(o_); }
  void save(std::ostream& out) const override { save_oracle(out, kind_, o_); }

 private:
  MultiLevelOracle o_;
  OracleKind kind_;
};

class ComposedHandle final : public OracleHandle {
 public:
  explicit ComposedHandle(ComposedOracle o) : o_(std::move(o)) {}
  OracleAnswer query(Vertex u, Vertex v) const override { return o_.query(u, v); }
  double declared_bound() const override { return o_.stretch_bound(); }
  double answer_bound(const OracleAnswer& a) const override { return o_.answer_bound(a.meet_level); }
  std::map<std::string, std::size_t> space() const override {
    auto out = multilevel_space(o_.inner());
    out["spanner_edges"] = o_.spanner_edges();
    return out;
  }
  void save(std::ostream& out) const override { save_oracle(out, OracleKind::kComposed, o_); }

 private:
  ComposedOracle o_;
};

class ExactHandle final : public OracleHandle {
 public:
  explicit ExactHandle(std::shared_ptr<const WeightedGraph> g) : g_(std::move(g)) {}
  OracleAnswer query(Vertex u, Vertex v) const override {
    OracleAnswer a;
    a.walk = extract_path(*g_, dijkstra_canonical(*g_, u), v);
    a.reported_length = a.walk.length();
    return a;
  }
  double declared_bound() const override { return 1; }
  double answer_bound(const OracleAnswer&) const override { return 1; }
  std::map<std::string, std::size_t> space() const override {
    // Offsets plus (to, weight, id) per arc.
    const std::size_t words = g_->num_vertices() + 1 + 6 * g_->num_edges();
    return {{"graph_words", words}, {"total_words", words}};
  }
  void save(std::ostream&) const override { throw ParameterError("the exact baseline has no oracle to save"); }

 private:
  std::shared_ptr<const WeightedGraph> g_;
};

std::vector<std::pair<Vertex, Vertex>> workload(const RunConfig& config, Vertex n) {
  if (config.pairs_file) {
    auto pairs = read_pairs_file(*config.pairs_file);
    for (auto [u, v] : pairs) {
      if (u >= n || v >= n) throw FormatError("query pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    return pairs;
  }
  if (n < 2) throw ParameterError("random queries need at least two vertices");
  std::vector<std::pair<Vertex, Vertex>> pairs(config.queries);
  for (std::size_t i = 0; i < config.queries; ++i) {
    const auto u = static_cast<Vertex>(mix64(config.query_seed, 2 * i) % n);
    auto v = static_cast<Vertex>(mix64(config.query_seed, 2 * i + 1) % n);
    if (u == v) v = (v + 1) % n;
    pairs[i] = {u, v};
  }
  return pairs;
}

OracleChoice choice_for_kind(OracleKind kind) {
  switch (kind) {
    case OracleKind::kDppro: return OracleChoice::kDppro;
    case OracleKind::kBasic: return OracleChoice::kBasic;
    case OracleKind::kMultilevel: return OracleChoice::kMultilevel;
    case OracleKind::kTilde: return OracleChoice::kTilde;
    case OracleKind::kComposed: return OracleChoice::kComposed;
  }
  throw FormatError("unknown oracle kind");
}

std::unique_ptr<OracleHandle> load_handle(const std::string& path, OracleChoice& choice) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  const OracleKind kind = read_oracle_header(in);
  choice = choice_for_kind(kind);
  switch (kind) {
    case OracleKind::kDppro: return std::make_unique<DpproHandle>(load_oracle_body<Dppro>(in));
    case OracleKind::kBasic: return std::make_unique<BasicHandle>(load_oracle_body<BasicOracle>(in));
    case OracleKind::kMultilevel:
    case OracleKind::kTilde: return std::make_unique<MultiLevelHandle>(load_oracle_body<MultiLevelOracle>(in), kind);
    case OracleKind::kComposed: return std::make_unique<ComposedHandle>(load_oracle_body<ComposedOracle>(in));
  }
  throw FormatError("unknown oracle kind");
}

std::unique_ptr<OracleHandle> build_handle(const RunConfig& config, const std::shared_ptr<const WeightedGraph>& g,
                                           const std::vector<std::pair<Vertex, Vertex>>& queries) {
  switch (config.oracle) {
    case OracleChoice::kDppro: {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (auto [u, v] : queries) {
        if (u != v) pairs.emplace_back(u, v);
      }
      const PairSet set(pairs);
      std::vector<Vertex> sources;
      for (const VertexPair& p : set.pairs()) sources.push_back(p.a);
      std::sort(sources.begin(), sources.end());
      sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
      CanonicalPathSystem system(*g);
      system.add_sources(sources);
      return std::make_unique<DpproHandle>(Dppro::build(*g, set, system));
    }
    case OracleChoice::kBasic: {
      BasicConfig bc;
      bc.k = config.k;
      bc.seed = config.seed;
      bc.sampling = config.sampling;
      return std::make_unique<BasicHandle>(BasicOracle::build(g, bc));
    }
    case OracleChoice::kMultilevel: {
      MultiLevelConfig mc;
      mc.h = config.h;
      mc.seed = config.seed;
      return std::make_unique<MultiLevelHandle>(MultiLevelOracle::build(g, mc), OracleKind::kMultilevel);
    }
    case OracleChoice::kTilde: {
      TildeConfig tc;
      tc.seed = config.seed;
      return std::make_unique<MultiLevelHandle>(build_lambda_tilde(g, tc), OracleKind::kTilde);
    }
    case OracleChoice::kComposed: {
      ComposedConfig cc;
      cc.r = config.r;
      cc.h = config.h;
      cc.seed = config.seed;
      if (config.spanner_file) {
        return std::make_unique<ComposedHandle>(ComposedOracle::build(read_spanner_file(g, *config.spanner_file), cc));
      }
      return std::make_unique<ComposedHandle>(ComposedOracle::build(g, cc));
    }
    case OracleChoice::kExact:
      return std::make_unique<ExactHandle>(g);
  }
  throw ParameterError("unknown oracle kind");
}

}  // namespace

BenchReport run_bench(const RunConfig& config) {
  return run_bench(config, std::make_shared<const WeightedGraph>(load_graph(config.graph)));
}

BenchReport run_bench(const RunConfig& config, std::shared_ptr<const WeightedGraph> graph) {
  const WeightedGraph& g = *graph;
  BenchReport report;
  report.config = config;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.lambda = density_lambda(g);
  const auto queries = workload(config, g.num_vertices());

  const auto build_start = Clock::now();
  std::unique_ptr<OracleHandle> oracle;
  if (config.load_path) {
    oracle = load_handle(*config.load_path, report.config.oracle);
  } else {
    oracle = build_handle(config, graph, queries);
  }
  report.build_seconds = seconds_since(build_start);
  if (config.save_path) {
    std::ofstream out(*config.save_path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + *config.save_path + "'");
    oracle->save(out);
  }
  report.declared_bound = oracle->declared_bound();
  report.space = oracle->space();

  const double fraction = config.verify.value_or(default_verify_fraction(g.num_vertices()));
  const std::uint64_t verify_seed = mix64(config.query_seed, 0x5e1ec7);
  struct Slot {
    QueryRow row;
    std::string defect;
  };
  std::vector<Slot> slots(queries.size());
  const auto query_start = Clock::now();
  parallel_for(queries.size(), [&](std::size_t i) {
    const auto [u, v] = queries[i];
    const OracleAnswer a = oracle->query(u, v);
    QueryRow& row = slots[i].row;
    row.index = i;
    row.u = u;
    row.v = v;
    row.reported_length = a.reported_length;
    row.hops = a.walk.hop_count();
    row.meet_level = a.meet_level;
    row.probes = a.probes;
    row.ball_explored = a.ball_explored;
    row.ball_tests = a.ball_tests;
    row.bound = oracle->answer_bound(a);
    // Every walk is rechecked against the host before it is reported.
    std::string defect = walk_defect(g, a.walk);
    if (defect.empty() && (a.walk.front() != u || a.walk.back() != v)) defect = "walk endpoints do not match the query";
    if (defect.empty() && a.walk.length() != a.reported_length) defect = "reported length differs from walk length";
    const bool verify = fraction >= 1.0 || unit_interval(mix64(verify_seed, i)) < fraction;
    if (verify) {
      const Weight exact = u == v ? 0 : exact_distances(g, u)[v];
      row.exact_length = exact;
      row.stretch = exact > 0 ? a.reported_length / exact : 1.0;
      if (defect.empty() && a.reported_length > row.bound * exact * (1 + 1e-12)) {
        defect = "stretch " + format_number(*row.stretch) + " exceeds bound " + format_number(row.bound);
      }
    }
    slots[i].defect = std::move(defect);
  });
  report.query_seconds = seconds_since(query_start);

  std::vector<double> stretches;
  for (Slot& s : slots) {
    if (!s.defect.empty()) report.violations.push_back({s.row.index, s.row.u, s.row.v, s.defect});
    if (s.row.stretch) stretches.push_back(*s.row.stretch);
    ++report.probe_histogram[s.row.probes];
    ++report.meet_histogram[s.row.meet_level];
    report.rows.push_back(std::move(s.row));
  }
  report.verified = stretches.size();
  if (!stretches.empty()) {
    double sum = 0;
    for (double x : stretches) sum += x;
    report.mean_stretch = sum / static_cast<double>(stretches.size());
    std::sort(stretches.begin(), stretches.end());
    report.max_stretch = stretches.back();
    const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(stretches.size())));
    report.p99_stretch = stretches[std::max<std::size_t>(rank, 1) - 1];
  }
  return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "schema=" << kCsvSchema << '\n' << kCsvHeader << '\n';
  for (const QueryRow& r : report.rows) {
    out << r.index << ',' << r.u << ',' << r.v << ',' << format_weight(r.reported_length) << ','
        << (r.exact_length ? format_weight(*r.exact_length) : "") << ','
        << (r.stretch ? format_number(*r.stretch) : "") << ',' << r.hops << ',' << r.meet_level << ',' << r.probes
        << ',' << r.ball_explored << '\n';
  }
}

nlohmann::ordered_json summary_json(const BenchReport& report) {
  using nlohmann::ordered_json;
  const RunConfig& c = report.config;
  ordered_json j;
  j["schema"] = kCsvSchema;
  j["command"] = "bench";
  ordered_json graph;
  if (c.graph.path) {
    graph["source"] = *c.graph.path;
  } else {
    graph["source"] = "generator";
    graph["model"] = std::string(to_string(c.graph.spec.model));
    graph["seed"] = c.graph.spec.seed;
    graph["weights"] = {c.graph.spec.weights.lo, c.graph.spec.weights.hi};
  }
  graph["n"] = report.n;
  graph["m"] = report.m;
  graph["lambda"] = report.lambda;
  j["graph"] = graph;
  ordered_json oracle;
  oracle["kind"] = to_string(c.oracle);
  oracle["k"] = c.k;
  oracle["h"] = c.h;
  oracle["r"] = c.r;
  oracle["seed"] = c.seed;
  oracle["sampling"] = to_string(c.sampling);
  oracle["declared_bound"] = report.declared_bound;
  oracle["loaded"] = c.load_path.has_value();
  j["oracle"] = oracle;
  ordered_json q;
  q["count"] = report.rows.size();
  q["verified"] = report.verified;
  q["max_stretch"] = report.max_stretch;
  q["mean_stretch"] = report.mean_stretch;
  q["p99_stretch"] = report.p99_stretch;
  std::size_t probes_max = 0;
  double ball_total = 0;
  std::size_t ball_tests = 0;
  for (const QueryRow& r : report.rows) {
    probes_max = std::max(probes_max, r.probes);
    ball_total += static_cast<double>(r.ball_explored);
    ball_tests += r.ball_tests;
  }
  q["max_probes"] = probes_max;
  q["mean_ball_explored_per_test"] = ball_tests == 0 ? 0.0 : ball_total / static_cast<double>(ball_tests);
  ordered_json hist = ordered_json::object();
  for (auto [p, count] : report.probe_histogram) hist[std::to_string(p)] = count;
  q["probe_histogram"] = hist;
  ordered_json meet = ordered_json::object();
  for (auto [p, count] : report.meet_histogram) meet[std::to_string(p)] = count;
  q["meet_level_histogram"] = meet;
  j["queries"] = q;
  ordered_json space = ordered_json::object();
  for (const auto& [name, words] : report.space) space[name] = words;
  const auto total = report.space.find("total_words");
  if (total != report.space.end() && report.n > 0) {
    space["words_per_vertex"] = static_cast<double>(total->second) / report.n;
  }
  j["space"] = space;
  j["timing"] = {{"build_seconds", report.build_seconds}, {"query_seconds", report.query_seconds}};
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"index", v.index}, {"u", v.u}, {"v", v.v}, {"reason", v.reason}});
  }
  j["violations"] = violations;
  j["ok"] = report.violations.empty();
  return j;
}

namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

}  // namespace

AuditReport run_audit(const AuditConfig& config) {
  if (config.seeds < 1) throw ParameterError("audit needs at least one seed");
  const auto g = std::make_shared<const WeightedGraph>(load_graph(config.graph));
  AuditReport report;
  report.config = config;
  report.n = g->num_vertices();
  report.m = g->num_edges();
  std::vector<double> ratios;
  std::vector<double> per_vertex;
  for (int s = 0; s < config.seeds; ++s) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(s);
    MultiLevelOracle built;
    ComposedOracle composed;
    const MultiLevelOracle* o = &built;
    switch (config.oracle) {
      case OracleChoice::kMultilevel: {
        MultiLevelConfig mc;
        mc.h = config.h;
        mc.seed = seed;
        built = MultiLevelOracle::build(g, mc);
        break;
      }
      case OracleChoice::kTilde: {
        TildeConfig tc;
        tc.seed = seed;
        built = build_lambda_tilde(g, tc);
        break;
      }
      case OracleChoice::kComposed: {
        ComposedConfig cc;
        cc.r = config.r;
        cc.h = config.h;
        cc.seed = seed;
        composed = ComposedOracle::build(g, cc);
        o = &composed.inner();
        break;
      }
      default:
        throw ParameterError("audit needs a multilevel-family oracle (multilevel, tilde or composed)");
    }
    AuditRun run;
    run.seed = seed;
    for (const LevelStats& st : o->level_stats()) {
      AuditLevel level{st, o->audit_branch_confinement(st.level)};
      report.total_violations += level.violations;
      run.levels.push_back(level);
    }
    if (run.levels.size() >= 2) {
      const LevelStats& first = run.levels[0].stats;
      if (first.branch_reference > 0) ratios.push_back(static_cast<double>(first.branch_events) / first.branch_reference);
      per_vertex.push_back(static_cast<double>(first.branch_events) / report.n);
    }
    report.runs.push_back(std::move(run));
  }
  if (!ratios.empty()) report.median_branch_ratio = median(ratios);
  if (!per_vertex.empty()) report.median_branch_per_vertex = median(per_vertex);
  return report;
}

nlohmann::ordered_json audit_json(const AuditReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kCsvSchema;
  j["command"] = "audit";
  j["oracle"] = to_string(report.config.oracle);
  j["n"] = report.n;
  j["m"] = report.m;
  ordered_json runs = ordered_json::array();
  for (const AuditRun& run : report.runs) {
    ordered_json levels = ordered_json::array();
    for (const AuditLevel& l : run.levels) {
      levels.push_back({{"level", l.stats.level},
                        {"landmarks", l.stats.landmarks},
                        {"rho", l.stats.rho},
                        {"pairs", l.stats.pairs},
                        {"branch_events", l.stats.branch_events},
                        {"branch_reference", l.stats.branch_reference},
                        {"pair_reference", l.stats.pair_reference},
                        {"dppro_words", l.stats.dppro_words},
                        {"confinement_violations", l.violations}});
    }
    runs.push_back({{"seed", run.seed}, {"levels", levels}});
  }
  j["runs"] = runs;
  j["median_branch_ratio"] = report.median_branch_ratio ? ordered_json(*report.median_branch_ratio) : ordered_json();
  j["median_branch_per_vertex"] =
      report.median_branch_per_vertex ? ordered_json(*report.median_branch_per_vertex) : ordered_json();
  j["total_violations"] = report.total_violations;
  j["ok"] = report.total_violations == 0;
  return j;
}

}  // namespace pathoracle::tools
