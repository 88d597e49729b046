#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathoracle {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;
using TieKey = std::uint64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

// Unordered vertex pair packed into one word, smaller id in the high half.
inline std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct RawEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
  TieKey key = 0;  // random tie-break key; sums along any simple path never overflow

  Vertex other(Vertex x) const { return x == u ? v : u; }

  template <class Archive>
  void serialize(Archive& ar) {
    ar(u, v, w, key);
  }
};

struct Arc {
  Vertex to = 0;
  Weight w = 0;
  EdgeId id = 0;
};

struct LoadStats {
  std::size_t self_loops_dropped = 0;
  std::size_t parallel_collapsed = 0;
};

/// Undirected graph with positive weights. Adjacency lists are sorted by
/// ascending weight (ties by neighbor id), so a search may stop scanning a
/// vertex's arcs as soon as one exceeds its cutoff. Immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Normalizes a raw edge list: self-loops are dropped, parallel edges collapse
  /// to the minimum weight, and every surviving edge gets a tie-break key
  /// derived from `key_seed` and its endpoints.
  static WeightedGraph from_edges(Vertex n, std::span<const RawEdge> edges,
                                  std::uint64_t key_seed = 0, LoadStats* stats = nullptr);

  /// Takes edges verbatim, keys included. Edges must already be simple.
  static WeightedGraph from_keyed_edges(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  bool is_connected() const;

  template <class Archive>
  void save(Archive& ar) const {
    ar(n_, edges_);
  }
  template <class Archive>
  void load(Archive& ar) {
    Vertex n = 0;
    std::vector<Edge> edges;
    ar(n, edges);
    *this = from_keyed_edges(n, std::move(edges));
  }

 private:
  void build_adjacency();

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// m/n, the average-degree proxy used for degree-weighted landmark sampling.
double density_lambda(const WeightedGraph& g);

}  // namespace pathoracle
