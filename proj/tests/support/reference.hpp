#pragma once

// Independent reference computations used only by tests. Nothing here shares
// code with the library's search routines.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"

namespace pathoracle::testing {

// Bellman-Ford over the undirected edge list.
inline std::vector<Weight> bellman_ford(const WeightedGraph& g, Vertex source) {
  std::vector<Weight> d(g.num_vertices(), kInfinity);
  d[source] = 0;
  for (Vertex round = 0; round + 1 < g.num_vertices(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (d[e.u] + e.w < d[e.v]) {
        d[e.v] = d[e.u] + e.w;
        changed = true;
      }
      if (d[e.v] + e.w < d[e.u]) {
        d[e.u] = d[e.v] + e.w;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return d;
}

// Textbook lazy-deletion Dijkstra; distances only.
inline std::vector<Weight> dijkstra(const WeightedGraph& g, Vertex source) {
  std::vector<std::vector<std::pair<Vertex, Weight>>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  std::vector<Weight> d(g.num_vertices(), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  d[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [dist, x] = heap.top();
    heap.pop();
    if (dist > d[x]) continue;
    for (const auto& [y, w] : adj[x]) {
      if (dist + w < d[y]) {
        d[y] = dist + w;
        heap.push({d[y], y});
      }
    }
  }
  return d;
}

// Floyd-Warshall, for graphs of a few hundred vertices at most.
inline std::vector<std::vector<Weight>> all_pairs(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInfinity));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      if (d[i][k] == kInfinity) continue;
      for (Vertex j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Edge set (as neighbor set) a walk uses at each visited vertex.
inline std::map<Vertex, std::set<Vertex>> incident_neighbors(const PathWalk& walk) {
  std::map<Vertex, std::set<Vertex>> out;
  const auto& vs = walk.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& s = out[vs[i]];
    if (i > 0) s.insert(vs[i - 1]);
    if (i + 1 < vs.size()) s.insert(vs[i + 1]);
  }
  return out;
}

struct BruteEvent {
  std::size_t lower;
  std::size_t upper;
  Vertex vertex;
  auto operator<=>(const BruteEvent&) const = default;
};

// All (i, j, z) with i < j where both walks visit z and use different edges there.
inline std::vector<BruteEvent> brute_force_events(const std::vector<PathWalk>& paths) {
  std::vector<std::map<Vertex, std::set<Vertex>>> inc;
  inc.reserve(paths.size());
  for (const PathWalk& p : paths) inc.push_back(incident_neighbors(p));
  std::vector<BruteEvent> out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      for (const auto& [z, edges] : inc[i]) {
        auto it = inc[j].find(z);
        if (it != inc[j].end() && it->second != edges) out.push_back({i, j, z});
      }
    }
  }
  return out;
}

// Ball(v) = {x : d(v,x) < min_{l in L} d(v,l)} from an all-pairs table.
inline std::set<Vertex> ball_by_definition(const std::vector<std::vector<Weight>>& d, Vertex v,
                                           const std::vector<Vertex>& landmarks) {
  Weight radius = kInfinity;
  for (Vertex l : landmarks) radius = std::min(radius, d[v][l]);
  std::set<Vertex> out;
  for (Vertex x = 0; x < d.size(); ++x) {
    if (d[v][x] < radius) out.insert(x);
  }
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> random_pairs(Vertex n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<std::pair<Vertex, Vertex>> out;
  while (out.size() < count) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u != v) out.emplace_back(u, v);
  }
  return out;
}

// Complete graph on `members` (renumbered 0..|members|-1) weighted by host distances.
inline WeightedGraph metric_closure(const WeightedGraph& g, const std::vector<Vertex>& members, std::uint64_t seed) {
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::vector<Weight> d = bellman_ford(g, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), d[members[j]]});
    }
  }
  return WeightedGraph::from_edges(static_cast<Vertex>(members.size()), edges, seed);
}

inline std::vector<Vertex> random_subset(Vertex n, std::size_t count, std::uint64_t seed) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace pathoracle::testing
