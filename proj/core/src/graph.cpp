#include "pathoracle/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pathoracle/errors.hpp"
#include "pathoracle/hashing.hpp"

namespace pathoracle {

namespace {

void check_edge(Vertex n, Vertex u, Vertex v, Weight w) {
  if (u >= n || v >= n) {
    throw FormatError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") references a vertex outside [0," + std::to_string(n) + ")");
  }
  if (!(w > 0) || !std::isfinite(w)) {
    throw FormatError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has non-positive or non-finite weight");
  }
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(Vertex n, std::span<const RawEdge> edges,
                                        std::uint64_t key_seed, LoadStats* stats) {
  LoadStats local;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  std::unordered_map<std::uint64_t, EdgeId> seen;
  seen.reserve(edges.size());
  // Keys are shifted right so that a sum over at most n-1 of them fits in 64 bits.
  const int shift = std::bit_width(static_cast<std::uint64_t>(std::max<Vertex>(n, 1)));
  for (const RawEdge& e : edges) {
    check_edge(n, e.u, e.v, e.w);
    if (e.u == e.v) {
      ++local.self_loops_dropped;
      continue;
    }
    const std::uint64_t pk = pair_key(e.u, e.v);
    auto [it, inserted] = seen.emplace(pk, static_cast<EdgeId>(kept.size()));
    if (!inserted) {
      ++local.parallel_collapsed;
      Edge& prior = kept[it->second];
      prior.w = std::min(prior.w, e.w);
      continue;
    }
    kept.push_back({e.u, e.v, e.w, mix64(key_seed, pk) >> shift});
  }
  if (stats != nullptr) *stats = local;
  return from_keyed_edges(n, std::move(kept));
}

WeightedGraph WeightedGraph::from_keyed_edges(Vertex n, std::vector<Edge> edges) {
  WeightedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.index_.reserve(g.edges_.size());
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    check_edge(n, e.u, e.v, e.w);
    if (e.u == e.v) throw FormatError("self-loop at vertex " + std::to_string(e.u));
    if (!g.index_.emplace(pair_key(e.u, e.v), id).second) {
      throw FormatError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  g.build_adjacency();
  return g;
}

void WeightedGraph::build_adjacency() {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  arcs_.resize(edges_.size() * 2);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    arcs_[fill[e.u]++] = {e.v, e.w, id};
    arcs_[fill[e.v]++] = {e.u, e.w, id};
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Arc& a, const Arc& b) { return a.w != b.w ? a.w < b.w : a.to < b.to; });
  }
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  auto it = index_.find(pair_key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Arc& a : neighbors(x)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  return reached == n_;
}

double density_lambda(const WeightedGraph& g) {
  if (g.num_vertices() == 0) throw ParameterError("density of an empty graph is undefined");
  return static_cast<double>(g.num_edges()) / g.num_vertices();
}

}  // namespace pathoracle
