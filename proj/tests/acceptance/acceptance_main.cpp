// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "pathoracle/basic_oracle.hpp"
#include "pathoracle/dppro.hpp"
#include "pathoracle/generators.hpp"
#include "pathoracle/multilevel.hpp"
#include "pathoracle/serialization.hpp"
#include "pathoracle/shortest_paths.hpp"
#include "pathoracle/spanner.hpp"
#include "pathoracle/tz.hpp"
#include "pathoracle_tools/bench.hpp"
#include "support/reference.hpp"

namespace {

using namespace pathoracle;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::shared_ptr<const WeightedGraph> shared(WeightedGraph g) { return std::make_shared<const WeightedGraph>(std::move(g)); }

std::string fmt(double x) { return tools::format_number(x); }

// Tracks the worst stretch of a query batch against a reference distance.
struct StretchCheck {
  double max_stretch = 1;
  std::size_t invalid = 0;
  std::size_t over_bound = 0;

  void add(const WeightedGraph& g, Vertex u, Vertex v, const PathWalk& walk, Weight reported, Weight exact,
           double bound) {
    if (!is_valid_walk(g, walk) || walk.front() != u || walk.back() != v || walk.length() != reported) ++invalid;
    const double s = exact > 0 ? reported / exact : 1.0;
    max_stretch = std::max(max_stretch, s);
    if (reported > bound * exact) ++over_bound;
  }
  bool ok() const { return invalid == 0 && over_bound == 0; }
};

const GeneratorSpec kGnm4096{GraphModel::kGnm, 4096, 16384, {1, 1}, 1};

// Reference distances for a fixed query list, grouped by source.
std::vector<Weight> exact_distances(const WeightedGraph& g, const std::vector<std::pair<Vertex, Vertex>>& queries) {
  std::map<Vertex, std::vector<Weight>> by_source;
  std::vector<Weight> out;
  out.reserve(queries.size());
  for (auto [u, v] : queries) {
    auto it = by_source.find(u);
    if (it == by_source.end()) it = by_source.emplace(u, testing::dijkstra(g, u)).first;
    out.push_back(it->second[v]);
  }
  return out;
}

// Criteria 1 and 2 share their instances.
struct DpproRun {
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  std::size_t max_events = 0;
  std::size_t max_events_brute = 0;
};

const DpproRun& dppro_run() {
  static const DpproRun run = [] {
    DpproRun r;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const WeightedGraph g = generate_graph({GraphModel::kGnm, 128, 512, {1, 100}, seed});
      const PairSet pairs(testing::random_pairs(128, 32, seed));
      CanonicalPathSystem sys(g);
      std::vector<Vertex> sources;
      for (const VertexPair& p : pairs.pairs()) sources.push_back(p.a);
      sys.add_sources(sources);
      const Dppro o = Dppro::build(g, pairs, sys);
      std::vector<PathWalk> walks;
      for (const VertexPair& p : pairs.pairs()) {
        const std::vector<Weight> d = testing::bellman_ford(g, p.a);
        for (const PathWalk& w : {o.query(p.a, p.b), o.query(p.b, p.a)}) {
          ++r.queries;
          const bool ends_ok = (w.front() == p.a && w.back() == p.b) || (w.front() == p.b && w.back() == p.a);
          if (!ends_ok || !is_valid_walk(g, w) || w.length() != d[p.b]) ++r.mismatches;
        }
        walks.push_back(o.query(p.a, p.b));
      }
      r.max_events = std::max(r.max_events, o.max_events_per_path_pair());
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> per_pair;
      for (const testing::BruteEvent& e : testing::brute_force_events(walks)) ++per_pair[{e.lower, e.upper}];
      for (const auto& [key, count] : per_pair) r.max_events_brute = std::max(r.max_events_brute, count);
    }
    return r;
  }();
  return run;
}

Outcome criterion1() {
  const DpproRun& r = dppro_run();
  return {r.mismatches == 0, std::to_string(r.queries) + " queries on 100 graphs, " + std::to_string(r.mismatches) +
                                 " not exact"};
}

Outcome criterion2() {
  const DpproRun& r = dppro_run();
  return {r.max_events <= 2 && r.max_events_brute <= 2,
          "max events per path pair " + std::to_string(r.max_events) + " (stored), " +
              std::to_string(r.max_events_brute) + " (brute force)"};
}

Outcome criterion3() {
  const auto g = shared(generate_graph(kGnm4096));
  const auto queries = testing::random_pairs(g->num_vertices(), 1000, 3);
  const std::vector<Weight> exact = exact_distances(*g, queries);
  Outcome out;
  for (int k = 1; k <= 3; ++k) {
    BasicConfig cfg;
    cfg.k = k;
    cfg.seed = 3;
    const BasicOracle o = BasicOracle::build(g, cfg);
    StretchCheck check;
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const OracleAnswer a = o.query(queries[i].first, queries[i].second);
      check.add(*g, queries[i].first, queries[i].second, a.walk, a.reported_length, exact[i], 6.0 * k - 1);
    }
    out.pass = out.pass && check.ok();
    out.detail += "k=" + std::to_string(k) + " max " + fmt(check.max_stretch) + " (<= " + fmt(6.0 * k - 1) + ")";
    if (check.invalid > 0) out.detail += " invalid " + std::to_string(check.invalid);
    out.detail += k < 3 ? "; " : "";
  }
  return out;
}

Outcome criterion4() {
  constexpr int kSeeds = 50;
  const Vertex n = kGnm4096.n;
  const double rho = choose_rho(n, 2);
  std::size_t explored = 0;
  std::size_t tests = 0;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    GeneratorSpec spec = kGnm4096;
    spec.seed = seed;
    BasicConfig cfg;
    cfg.k = 2;
    cfg.seed = seed;
    const BasicOracle o = BasicOracle::build(shared(generate_graph(spec)), cfg);
    for (auto [u, v] : testing::random_pairs(n, 1000, seed)) {
      const OracleAnswer a = o.query(u, v);
      explored += a.ball_explored;
      tests += a.ball_tests;
    }
  }
  const double mean = tests > 0 ? static_cast<double>(explored) / static_cast<double>(tests) : 0.0;
  const double limit = 2.0 * n / rho;
  return {tests > 0 && mean <= limit, "mean explored per ball test " + fmt(mean) + " over " + std::to_string(tests) +
                                          " tests, " + std::to_string(kSeeds) + " seeds (<= " + fmt(limit) + ")"};
}

Outcome criterion5() {
  const auto g = shared(generate_graph(kGnm4096));
  const auto queries = testing::random_pairs(g->num_vertices(), 1000, 5);
  const std::vector<Weight> exact = exact_distances(*g, queries);
  Outcome out;
  for (int h = 1; h <= 3; ++h) {
    MultiLevelConfig cfg;
    cfg.h = h;
    cfg.seed = 5;
    const MultiLevelOracle o = MultiLevelOracle::build(g, cfg);
    StretchCheck overall;
    StretchCheck per_query;
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const auto [u, v] = queries[i];
      const OracleAnswer a = o.query(u, v);
      overall.add(*g, u, v, a.walk, a.reported_length, exact[i], level_stretch_bound(h));
      per_query.add(*g, u, v, a.walk, a.reported_length, exact[i], level_stretch_bound(a.meet_level));
    }
    out.pass = out.pass && overall.ok() && per_query.ok();
    out.detail += "h=" + std::to_string(h) + " max " + fmt(overall.max_stretch) + " (<= " +
                  fmt(level_stretch_bound(h)) + "), per-level excess " + std::to_string(per_query.over_bound);
    out.detail += h < 3 ? "; " : "";
  }
  return out;
}

Outcome criterion6() {
  std::size_t violations = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    MultiLevelConfig cfg;
    cfg.h = 2;
    cfg.seed = seed;
    const MultiLevelOracle o =
        MultiLevelOracle::build(shared(generate_graph({GraphModel::kGnm, 512, 2048, {1, 100}, seed})), cfg);
    for (int i = 1; i <= 2; ++i) violations += o.audit_branch_confinement(i);
  }
  return {violations == 0, std::to_string(violations) + " confinement violations over 100 seeds"};
}

Outcome criterion7() {
  std::vector<double> medians;
  std::string detail = "median |Branch_1|/n:";
  for (Vertex n : {1024u, 2048u, 4096u, 8192u}) {
    std::vector<double> per_seed;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      MultiLevelConfig cfg;
      cfg.h = 2;
      cfg.seed = seed;
      const MultiLevelOracle o =
          MultiLevelOracle::build(shared(generate_graph({GraphModel::kGnm, n, 4 * std::size_t{n}, {1, 100}, seed})), cfg);
      per_seed.push_back(static_cast<double>(o.level_stats()[0].branch_events) / n);
    }
    std::sort(per_seed.begin(), per_seed.end());
    const double median = (per_seed[9] + per_seed[10]) / 2;
    medians.push_back(median);
    detail += " n=" + std::to_string(n) + " " + fmt(median);
  }
  const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
  detail += "; band [" + fmt(*lo) + ", " + fmt(*hi) + "] (hi <= 4 lo)";
  if (*hi == 0) detail += "; degenerate, level-1 pair sets are nearly empty at these sizes";
  return {*hi <= 4 * *lo, detail};
}

Outcome criterion8() {
  const WeightedGraph host = generate_graph({GraphModel::kGnm, 65536, 131072, {1, 1}, 8});
  TildeBuildInfo info;
  const MultiLevelOracle o = build_lambda_tilde(std::make_shared<const WeightedGraph>(host), {8}, &info);
  const std::size_t limit = 4 * static_cast<std::size_t>(o.h());
  std::size_t max_probes = 0;
  std::size_t over = 0;
  std::size_t invalid = 0;
  std::size_t ball_tests = 0;
  for (auto [u, v] : testing::random_pairs(host.num_vertices(), 1000, 8)) {
    const OracleAnswer a = o.query(u, v);
    max_probes = std::max(max_probes, a.probes);
    if (a.probes > limit) ++over;
    ball_tests += a.ball_tests;
    if (!is_valid_walk(host, a.walk) || a.walk.front() != u || a.walk.back() != v) ++invalid;
  }
  const bool pass = o.h() == 10 && over == 0 && invalid == 0 && ball_tests == 0 && !o.retains_graph();
  return {pass, "h=" + std::to_string(o.h()) + ", max probes " + std::to_string(max_probes) + " (<= " +
                    std::to_string(limit) + "), graph retained " + (o.retains_graph() ? "yes" : "no") +
                    ", invalid walks " + std::to_string(invalid)};
}

Outcome criterion9() {
  const WeightedGraph host = generate_graph({GraphModel::kGnm, 1024, 4096, {1, 100}, 9});
  double max_stretch = 1;
  std::size_t over = 0;
  std::vector<std::size_t> sizes;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WeightedGraph closure = testing::metric_closure(host, testing::random_subset(1024, 64, seed), seed);
    const TzOracle o = TzOracle::build(closure, {2, seed});
    sizes.push_back(extract_union_spanner(o).size());
    const auto d = testing::all_pairs(closure);
    for (Vertex u = 0; u < 64; ++u) {
      for (Vertex v = 0; v < 64; ++v) {
        if (u == v) continue;
        const PathWalk w = o.query(u, v);
        if (!is_valid_walk(closure, w) || w.front() != u || w.back() != v || w.length() > 3 * d[u][v]) ++over;
        max_stretch = std::max(max_stretch, w.length() / d[u][v]);
      }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  const double median = (sizes[9] + sizes[10]) / 2.0;
  const double cap = 4.0 * 2 * std::pow(64.0, 1.5);
  return {over == 0 && median <= cap, "max stretch " + fmt(max_stretch) + " (<= 3), median |H| " + fmt(median) +
                                          " (<= " + fmt(cap) + ")"};
}

Outcome criterion10() {
  const auto c5 = shared(generate_graph({GraphModel::kCycle, 5, 0, {}, 0}));
  const std::map<int, std::size_t> expected = {{1, 5}, {2, 5}, {3, 4}, {4, 4}};
  bool hand_ok = true;
  for (const auto& [r, kept] : expected) {
    const SpannerGraph s = greedy_spanner(c5, r);
    hand_ok = hand_ok && s.kept.size() == kept && s.stretch == 2.0 * r - 1 && s.graph->is_connected();
  }

  const auto g = shared(generate_graph(kGnm4096));
  ComposedConfig cfg;
  cfg.r = 3;
  cfg.h = 2;
  cfg.seed = 10;
  const ComposedOracle o = ComposedOracle::build(g, cfg);
  const auto queries = testing::random_pairs(g->num_vertices(), 1000, 10);
  const std::vector<Weight> exact = exact_distances(*g, queries);
  StretchCheck overall;
  StretchCheck per_query;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto [u, v] = queries[i];
    const OracleAnswer a = o.query(u, v);
    overall.add(*g, u, v, a.walk, a.reported_length, exact[i], 5.0 * 41.0);
    per_query.add(*g, u, v, a.walk, a.reported_length, exact[i], o.answer_bound(a.meet_level));
  }
  return {hand_ok && overall.ok() && per_query.ok(),
          std::string("C5 hand cases ") + (hand_ok ? "match" : "differ") + "; composed r=3 h=2 max " +
              fmt(overall.max_stretch) + " (<= 205), " + std::to_string(o.spanner_edges()) + " spanner edges"};
}

template <class Oracle>
std::size_t round_trip_mismatches(const Oracle& o, OracleKind kind, const std::vector<std::pair<Vertex, Vertex>>& qs) {
  std::stringstream buf;
  save_oracle(buf, kind, o);
  if (read_oracle_header(buf) != kind) return qs.size();
  const Oracle back = load_oracle_body<Oracle>(buf);
  std::size_t bad = 0;
  for (auto [u, v] : qs) {
    const OracleAnswer a = o.query(u, v);
    const OracleAnswer b = back.query(u, v);
    if (a.walk != b.walk || a.reported_length != b.reported_length || a.probes != b.probes ||
        a.meet_level != b.meet_level) {
      ++bad;
    }
  }
  return bad;
}

std::string csv_of(const tools::BenchReport& report) {
  std::ostringstream out;
  tools::write_csv(out, report);
  return out.str();
}

Outcome criterion11() {
  Outcome out;
  const std::filesystem::path file =
      std::filesystem::temp_directory_path() / ("pathoracle_acceptance_" +
                                                          std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + ".bin");
  for (tools::OracleChoice choice :
       {tools::OracleChoice::kBasic, tools::OracleChoice::kMultilevel, tools::OracleChoice::kComposed}) {
    tools::RunConfig cfg;
    cfg.graph.spec = kGnm4096;
    cfg.oracle = choice;
    cfg.seed = 11;
    cfg.queries = 1000;
    cfg.query_seed = 11;
    cfg.verify = 0.0;
    cfg.save_path = file.string();
    const std::string first = csv_of(tools::run_bench(cfg));
    cfg.save_path.reset();
    const std::string second = csv_of(tools::run_bench(cfg));
    cfg.load_path = file.string();
    const std::string loaded = csv_of(tools::run_bench(cfg));
    const bool same = first == second;
    const bool round = first == loaded;
    out.pass = out.pass && same && round;
    out.detail += tools::to_string(choice) + (same ? " csv identical" : " csv differs") +
                  (round ? ", load matches; " : ", load differs; ");
  }
  std::filesystem::remove(file);

  const auto g = shared(generate_graph(kGnm4096));
  const auto qs = testing::random_pairs(g->num_vertices(), 1000, 11);
  std::size_t bad = 0;
  BasicConfig bc;
  bc.seed = 11;
  bad += round_trip_mismatches(BasicOracle::build(g, bc), OracleKind::kBasic, qs);
  MultiLevelConfig mc;
  mc.seed = 11;
  bad += round_trip_mismatches(MultiLevelOracle::build(g, mc), OracleKind::kMultilevel, qs);
  bad += round_trip_mismatches(build_lambda_tilde(g, {11}), OracleKind::kTilde, qs);
  ComposedConfig cc;
  cc.seed = 11;
  bad += round_trip_mismatches(ComposedOracle::build(g, cc), OracleKind::kComposed, qs);
  out.pass = out.pass && bad == 0;
  out.detail += "in-memory round trips " + std::to_string(bad) + " mismatches over 4x1000 queries";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dppro exactness", criterion1},      {"branching-event cap", criterion2},
      {"basic oracle stretch", criterion3}, {"ball-size law", criterion4},
      {"multilevel stretch", criterion5},   {"branching confinement", criterion6},
      {"branching-count scaling", criterion7}, {"tilde probe bound", criterion8},
      {"tz on closures", criterion9},       {"spanner and composition", criterion10},
      {"determinism and round trip", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.pass) ++failures;
    std::printf("criterion %2zu %s %s: %s [%.1f s]\n", i + 1, result.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                result.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
