// pathoracle: generate graphs, benchmark oracles, audit multilevel structures.
//
// Exit codes: 0 success, 1 error (bad input, I/O), 2 bound or audit violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pathoracle/errors.hpp"
#include "pathoracle/graph_io.hpp"
#include "pathoracle_tools/bench.hpp"

namespace {

using namespace pathoracle;
using namespace pathoracle::tools;

struct GraphFlags {
  std::string in;
  std::string model = "gnm";
  Vertex n = 4096;
  std::size_t m = 16384;
  std::uint32_t wmin = 1;
  std::uint32_t wmax = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--in", in, "Graph TSV file (overrides the generator flags)");
    cmd->add_option("--model", model, "Generator model: gnm, grid, path, cycle");
    cmd->add_option("--n", n, "Vertex count");
    cmd->add_option("--m", m, "Edge count (gnm)");
    cmd->add_option("--wmin", wmin, "Smallest integer weight");
    cmd->add_option("--wmax", wmax, "Largest integer weight");
  }

  GraphSource source(std::uint64_t seed) const {
    GraphSource s;
    if (!in.empty()) s.path = in;
    s.spec = {parse_graph_model(model), n, m, {wmin, wmax}, seed};
    return s;
  }
};

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-reporting distance oracles: generate, bench, audit"};
  app.require_subcommand(1);
  // -h is left free so --h can name the level count.
  app.set_help_flag("--help", "Print this help message and exit");

  GraphFlags gen_graph;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated graph as TSV");
  gen_graph.add(gen);
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  GraphFlags bench_graph;
  RunConfig run;
  std::string oracle = "multilevel";
  std::string sampling = "uniform";
  std::string csv_out;
  std::string json_out;
  std::string spanner_file;
  std::string pairs_file;
  std::string save;
  std::string load;
  std::optional<std::uint64_t> graph_seed;
  std::optional<double> verify;
  CLI::App* bench = app.add_subcommand("bench", "Build an oracle, run a verified query workload, report CSV and JSON");
  bench_graph.add(bench);
  bench->add_option("--graph-seed", graph_seed, "Generator and tie-key seed (defaults to --seed)");
  bench->add_option("--oracle", oracle, "dppro, basic, multilevel, tilde, composed or exact-baseline");
  bench->add_option("--k", run.k, "Basic oracle parameter k");
  bench->add_option("--h", run.h, "Multilevel level count h");
  bench->add_option("--r", run.r, "Greedy spanner parameter r (stretch 2r-1)");
  bench->add_option("--seed", run.seed, "Oracle seed");
  bench->add_option("--sampling", sampling, "Landmark sampling: uniform or degree");
  bench->add_option("--spanner-file", spanner_file, "External spanner edge list for --oracle composed");
  bench->add_option("--queries", run.queries, "Random query count");
  bench->add_option("--query-seed", run.query_seed, "Random query seed");
  bench->add_option("--pairs-file", pairs_file, "Query pairs, one `u v` per line");
  bench->add_option("--verify", verify, "Fraction of queries checked by exact Dijkstra")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--out", csv_out, "CSV output (stdout when omitted)");
  bench->add_option("--json", json_out, "JSON summary output");
  bench->add_option("--save", save, "Write the built oracle to this file");
  bench->add_option("--load", load, "Load a saved oracle instead of building");

  GraphFlags audit_graph;
  AuditConfig audit_cfg;
  std::string audit_oracle = "multilevel";
  std::string audit_json_out;
  std::optional<std::uint64_t> audit_graph_seed;
  CLI::App* audit = app.add_subcommand("audit", "Per-level pair and branching statistics with the confinement audit");
  audit_graph.add(audit);
  audit->add_option("--graph-seed", audit_graph_seed, "Generator seed (defaults to --seed)");
  audit->add_option("--oracle", audit_oracle, "multilevel, tilde or composed");
  audit->add_option("--h", audit_cfg.h, "Level count");
  audit->add_option("--r", audit_cfg.r, "Spanner parameter for composed");
  audit->add_option("--seed", audit_cfg.seed, "First oracle seed");
  audit->add_option("--seeds", audit_cfg.seeds, "Number of consecutive oracle seeds");
  audit->add_option("--json", audit_json_out, "JSON output (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const WeightedGraph g = load_graph(gen_graph.source(gen_seed));
      if (gen_out.empty()) {
        write_graph_tsv(std::cout, g);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw FormatError("cannot write '" + gen_out + "'");
        write_graph_tsv(out, g);
      }
      std::ostream& info = gen_out.empty() ? std::cerr : std::cout;
      info << "n=" << g.num_vertices() << " m=" << g.num_edges() << " lambda=" << format_number(density_lambda(g))
           << '\n';
      return 0;
    }
    if (*bench) {
      run.graph = bench_graph.source(graph_seed.value_or(run.seed));
      run.oracle = parse_oracle_choice(oracle);
      run.sampling = parse_sampling_mode(sampling);
      if (!spanner_file.empty()) run.spanner_file = spanner_file;
      if (!pairs_file.empty()) run.pairs_file = pairs_file;
      if (!save.empty()) run.save_path = save;
      if (!load.empty()) run.load_path = load;
      run.verify = verify;
      const BenchReport report = run_bench(run);
      if (csv_out.empty() || csv_out == "-") {
        write_csv(std::cout, report);
      } else {
        std::ofstream out(csv_out);
        if (!out) throw FormatError("cannot write '" + csv_out + "'");
        write_csv(out, report);
      }
      if (!json_out.empty()) write_json(json_out, summary_json(report));
      for (const Violation& v : report.violations) {
        std::cerr << "violation: query " << v.index << " (" << v.u << "," << v.v << "): " << v.reason << '\n';
      }
      return report.violations.empty() ? 0 : 2;
    }
    if (*audit) {
      audit_cfg.graph = audit_graph.source(audit_graph_seed.value_or(audit_cfg.seed));
      audit_cfg.oracle = parse_oracle_choice(audit_oracle);
      const AuditReport report = run_audit(audit_cfg);
      write_json(audit_json_out, audit_json(report));
      if (report.total_violations > 0) {
        std::cerr << "audit: " << report.total_violations << " confinement violations\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
