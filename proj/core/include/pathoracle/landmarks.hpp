#pragma once

#include <cstdint>
#include <vector>

#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"

namespace pathoracle {

/// Vertex-disjoint shortest-path trees rooted at a landmark set. Each vertex
/// points at its nearest landmark, ties going to the smallest landmark id,
/// and stores the edge towards its tree parent, so root paths can be walked
/// without the graph.
class NearestLandmarkForest {
 public:
  NearestLandmarkForest() = default;

  // Multi-source canonical Dijkstra from `landmarks` (must be nonempty).
  static NearestLandmarkForest build(const WeightedGraph& g, const std::vector<Vertex>& landmarks);

  Vertex size() const { return static_cast<Vertex>(root_.size()); }
  Vertex root(Vertex v) const { return root_[v]; }
  Weight dist(Vertex v) const { return dist_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Weight parent_weight(Vertex v) const { return parent_w_[v]; }

  // Walk v -> root(v) along forest edges.
  PathWalk path_to_root(Vertex v) const;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(root_, dist_, parent_, parent_w_);
  }

 private:
  std::vector<Vertex> root_;
  std::vector<Weight> dist_;
  std::vector<Vertex> parent_;  // kNoVertex at roots
  std::vector<Weight> parent_w_;
};

}  // namespace pathoracle
