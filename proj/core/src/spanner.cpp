#include "pathoracle/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <queue>
#include <tuple>

#include "pathoracle/errors.hpp"
#include "pathoracle/graph_io.hpp"
#include "pathoracle/parallel.hpp"
#include "pathoracle/shortest_paths.hpp"

namespace pathoracle {

double SpannerGraph::size_reference() const {
  if (r == 0) return 0;
  const double n = host->num_vertices();
  return std::pow(n, 1.0 + 1.0 / r) + n;
}

namespace {

// Dijkstra over a growing adjacency list; true iff `target` is within `cutoff`.
class BoundedProbe {
 public:
  explicit BoundedProbe(Vertex n) : dist_(n, kInfinity) {}

  bool within(const std::vector<std::vector<std::pair<Vertex, Weight>>>& adj, Vertex source, Vertex target,
              Weight cutoff) {
    for (Vertex x : touched_) dist_[x] = kInfinity;
    touched_.clear();
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist_[source] = 0;
    touched_.push_back(source);
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != dist_[x]) continue;
      if (x == target) return true;
      for (auto [y, w] : adj[x]) {
        const Weight nd = d + w;
        if (nd > cutoff || nd >= dist_[y]) continue;
        if (dist_[y] == kInfinity) touched_.push_back(y);
        dist_[y] = nd;
        heap.emplace(nd, y);
      }
    }
    return false;
  }

 private:
  std::vector<Weight> dist_;
  std::vector<Vertex> touched_;
};

SpannerGraph finish(std::shared_ptr<const WeightedGraph> host, std::vector<EdgeId> kept, int r, double stretch) {
  std::sort(kept.begin(), kept.end());
  std::vector<Edge> edges;
  edges.reserve(kept.size());
  for (EdgeId id : kept) edges.push_back(host->edge(id));
  SpannerGraph s;
  s.graph = std::make_shared<WeightedGraph>(WeightedGraph::from_keyed_edges(host->num_vertices(), std::move(edges)));
  s.host = std::move(host);
  s.kept = std::move(kept);
  s.r = r;
  s.stretch = stretch;
  return s;
}

}  // namespace

SpannerGraph greedy_spanner(std::shared_ptr<const WeightedGraph> host, int r) {
  if (r < 1) throw ParameterError("spanner parameter r must be >= 1");
  const WeightedGraph& g = *host;
  const double s = 2.0 * r - 1.0;
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId id = 0; id < order.size(); ++id) order[id] = id;
  std::sort(order.begin(), order.end(), [&g](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return std::tie(x.w, x.key, a) < std::tie(y.w, y.key, b);
  });
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(g.num_vertices());
  BoundedProbe probe(g.num_vertices());
  std::vector<EdgeId> kept;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (probe.within(adj, e.u, e.v, s * e.w)) continue;
    kept.push_back(id);
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  return finish(std::move(host), std::move(kept), r, s);
}

double measure_spanner_stretch(const WeightedGraph& host, const WeightedGraph& spanner) {
  std::mutex mu;
  double worst = 1.0;
  parallel_for(host.num_vertices(), [&](std::size_t i) {
    const auto u = static_cast<Vertex>(i);
    bool has_upper = false;
    for (const Arc& a : host.neighbors(u)) has_upper = has_upper || a.to > u;
    if (!has_upper) return;
    const std::vector<Weight> d = exact_distances(spanner, u);
    double local = 1.0;
    for (const Arc& a : host.neighbors(u)) {
      if (a.to > u) local = std::max(local, d[a.to] / a.w);
    }
    std::lock_guard<std::mutex> lock(mu);
    worst = std::max(worst, local);
  });
  return worst;
}

SpannerGraph spanner_from_edges(std::shared_ptr<const WeightedGraph> host, const std::vector<RawEdge>& edges) {
  std::vector<EdgeId> kept;
  kept.reserve(edges.size());
  for (const RawEdge& e : edges) {
    const auto id = host->find_edge(e.u, e.v);
    if (!id) {
      throw FormatError("spanner edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a host edge");
    }
    if (host->edge(*id).w != e.w) {
      throw FormatError("spanner edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has weight " + format_weight(e.w) + ", host has " + format_weight(host->edge(*id).w));
    }
    kept.push_back(*id);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  SpannerGraph s = finish(std::move(host), std::move(kept), 0, 1.0);
  if (!s.graph->is_connected()) throw FormatError("spanner does not span the host graph");
  s.stretch = measure_spanner_stretch(*s.host, *s.graph);
  return s;
}

SpannerGraph read_spanner(std::shared_ptr<const WeightedGraph> host, std::istream& in) {
  const WeightedGraph file = read_graph_tsv(in);
  if (file.num_vertices() != host->num_vertices()) {
    throw FormatError("spanner has " + std::to_string(file.num_vertices()) + " vertices, host has " +
                      std::to_string(host->num_vertices()));
  }
  std::vector<RawEdge> edges;
  edges.reserve(file.num_edges());
  for (const Edge& e : file.edges()) edges.push_back({e.u, e.v, e.w});
  return spanner_from_edges(std::move(host), edges);
}

SpannerGraph read_spanner_file(std::shared_ptr<const WeightedGraph> host, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_spanner(std::move(host), in);
}

ComposedOracle ComposedOracle::build(std::shared_ptr<const WeightedGraph> host, const ComposedConfig& config) {
  return build(greedy_spanner(std::move(host), config.r), config);
}

ComposedOracle ComposedOracle::build(const SpannerGraph& spanner, const ComposedConfig& config) {
  ComposedOracle o;
  o.host_ = spanner.host;
  o.stretch_ = spanner.stretch;
  o.spanner_edges_ = spanner.kept.size();
  MultiLevelConfig mc;
  mc.h = config.h;
  mc.variant = config.variant;
  mc.seed = config.seed;
  o.inner_ = MultiLevelOracle::build(spanner.graph, mc);
  return o;
}

OracleAnswer ComposedOracle::query(Vertex u, Vertex v) const {
  OracleAnswer ans = inner_.query(u, v);
  const std::string defect = walk_defect(*host_, ans.walk);
  if (!defect.empty()) throw std::logic_error("composed oracle produced a non-host walk: " + defect);
  return ans;
}

}  // namespace pathoracle
