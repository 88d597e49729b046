#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pathoracle/dppro.hpp"
#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"

namespace pathoracle {

struct TzConfig {
  int k = 2;
  std::uint64_t seed = 0;
  // Resampling budget for the union-spanner size cap (and for draws that
  // leave a level empty).
  int size_cap_retries = 8;
  // Cap is size_cap_constant * k * n^(1+1/k) pairs.
  double size_cap_constant = 4.0;
};

// All host pairs that any query may traverse: the union of the cluster trees.
struct UnionSpanner {
  std::vector<VertexPair> pairs;  // sorted

  std::size_t size() const { return pairs.size(); }
  bool contains(Vertex u, Vertex v) const;
};

/// Path-reporting Thorup-Zwick oracle with stretch 2k-1. Level sets
/// A_0 = V ⊇ A_1 ⊇ ... ⊇ A_{k-1}, A_k = ∅; every vertex keeps its witnesses
/// p_i(v) and its bunch, and each bunch entry remembers the parent edge in
/// the cluster tree of its bunch vertex so the witness path can be walked.
class TzOracle {
 public:
  TzOracle() = default;

  static TzOracle build(const WeightedGraph& host, const TzConfig& config);

  // Walk u -> p -> v in the host, p being the witness where the bunch ascent stops.
  PathWalk query(Vertex u, Vertex v, std::size_t* probes = nullptr) const;

  int k() const { return k_; }
  Vertex num_vertices() const { return static_cast<Vertex>(bunches_.size()); }
  const std::vector<Vertex>& level(int i) const { return levels_[static_cast<std::size_t>(i)]; }
  Vertex witness(int i, Vertex v) const { return witness_[static_cast<std::size_t>(i)][v]; }
  Weight witness_dist(int i, Vertex v) const { return witness_dist_[static_cast<std::size_t>(i)][v]; }
  std::optional<Weight> bunch_dist(Vertex v, Vertex w) const;
  std::size_t bunch_size(Vertex v) const { return bunches_[v].size(); }
  // Bunch entries at 3 words each plus one witness and one distance per level.
  std::size_t word_count() const;

  // Build diagnostics.
  int attempts() const { return attempts_; }
  std::size_t size_cap() const { return size_cap_; }

  template <class Archive>
  void serialize(Archive& ar) {
    ar(k_, levels_, witness_, witness_dist_, bunches_, attempts_, size_cap_);
  }

 private:
  struct BunchEntry {
    Weight dist = 0;
    Vertex parent = kNoVertex;  // next vertex towards the bunch vertex
    Weight parent_w = 0;

    template <class Archive>
    void serialize(Archive& ar) {
      ar(dist, parent, parent_w);
    }
  };

  static TzOracle build_once(const WeightedGraph& host, int k, std::uint64_t seed);
  PathWalk cluster_path(Vertex from, Vertex center) const;

  friend UnionSpanner extract_union_spanner(const TzOracle& oracle);

  int k_ = 1;
  std::vector<std::vector<Vertex>> levels_;
  std::vector<std::vector<Vertex>> witness_;
  std::vector<std::vector<Weight>> witness_dist_;
  std::vector<std::unordered_map<Vertex, BunchEntry>> bunches_;
  int attempts_ = 0;
  std::size_t size_cap_ = 0;
};

UnionSpanner extract_union_spanner(const TzOracle& oracle);

}  // namespace pathoracle
