#include "pathoracle/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pathoracle/errors.hpp"

namespace pathoracle {

GraphModel parse_graph_model(std::string_view name) {
  if (name == "gnm") return GraphModel::kGnm;
  if (name == "grid") return GraphModel::kGrid;
  if (name == "path") return GraphModel::kPath;
  if (name == "cycle") return GraphModel::kCycle;
  throw ParameterError("unknown graph model '" + std::string(name) + "'");
}

std::string_view to_string(GraphModel model) {
  switch (model) {
    case GraphModel::kGnm: return "gnm";
    case GraphModel::kGrid: return "grid";
    case GraphModel::kPath: return "path";
    case GraphModel::kCycle: return "cycle";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

std::vector<std::pair<Vertex, Vertex>> random_spanning_tree(Vertex n, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> tree;
  if (n < 2) return tree;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> prufer(n - 2);
  for (Vertex& x : prufer) x = pick(rng);
  std::vector<Vertex> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  tree.reserve(n - 1);
  for (Vertex x : prufer) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    tree.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  tree.emplace_back(a, leaves.top());
  return tree;
}

std::vector<std::pair<Vertex, Vertex>> gnm_edges(Vertex n, std::size_t m, Rng& rng) {
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > max_edges) {
    throw ParameterError("gnm: m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(max_edges));
  }
  if (n > 0 && m + 1 < n) {
    throw ParameterError("gnm: m=" + std::to_string(m) + " is too small for a connected graph on " +
                         std::to_string(n) + " vertices");
  }
  auto edges = random_spanning_tree(n, rng);
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (auto [a, b] : edges) present.insert(pair_key(a, b));
  if (m - edges.size() > (max_edges - edges.size()) / 2) {
    // Dense request: sample from the explicit complement.
    std::vector<std::pair<Vertex, Vertex>> missing;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!present.count(pair_key(a, b))) missing.emplace_back(a, b);
      }
    }
    std::shuffle(missing.begin(), missing.end(), rng);
    missing.resize(m - edges.size());
    edges.insert(edges.end(), missing.begin(), missing.end());
    return edges;
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  while (edges.size() < m) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || !present.insert(pair_key(a, b)).second) continue;
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

WeightedGraph generate_graph(const GeneratorSpec& spec) {
  const Vertex n = spec.n;
  if (n < 1) throw ParameterError("generator needs n >= 1");
  if (spec.weights.lo < 1 || spec.weights.hi < spec.weights.lo) {
    throw ParameterError("weight range must satisfy 1 <= lo <= hi");
  }
  Rng rng(spec.seed);
  std::vector<std::pair<Vertex, Vertex>> topology;
  switch (spec.model) {
    case GraphModel::kGnm:
      topology = gnm_edges(n, spec.m, rng);
      break;
    case GraphModel::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) topology.emplace_back(v, v + 1);
      break;
    case GraphModel::kCycle:
      if (n < 3) throw ParameterError("cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) topology.emplace_back(v, (v + 1) % n);
      break;
    case GraphModel::kGrid: {
      const auto width = static_cast<Vertex>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (Vertex v = 0; v < n; ++v) {
        if ((v + 1) % width != 0 && v + 1 < n) topology.emplace_back(v, v + 1);
        if (v + width < n) topology.emplace_back(v, v + width);
      }
      break;
    }
  }
  std::uniform_int_distribution<std::uint32_t> weight(spec.weights.lo, spec.weights.hi);
  std::vector<RawEdge> edges;
  edges.reserve(topology.size());
  for (auto [a, b] : topology) edges.push_back({a, b, static_cast<Weight>(weight(rng))});
  return WeightedGraph::from_edges(n, edges, spec.seed);
}

}  // namespace pathoracle
