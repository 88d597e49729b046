#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathoracle/graph.hpp"

namespace pathoracle {

/// A walk reported by an oracle: vertex sequence plus the weight of every
/// traversed edge. The length is always the left-to-right sum of those
/// weights, so it is bit-reproducible for a fixed walk.
class PathWalk {
 public:
  PathWalk() = default;
  explicit PathWalk(Vertex start) : vertices_{start} {}

  static PathWalk from_parts(std::vector<Vertex> vertices, std::vector<Weight> weights);

  bool empty() const { return vertices_.empty(); }
  std::size_t hop_count() const { return weights_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Weight>& weights() const { return weights_; }

  Weight length() const;

  void push(Vertex next, Weight w) {
    vertices_.push_back(next);
    weights_.push_back(w);
  }

  // Appends `tail`, whose first vertex must equal this walk's last vertex.
  void append(const PathWalk& tail);
  void append_reversed(const PathWalk& tail);

  PathWalk reversed() const;

  friend bool operator==(const PathWalk&, const PathWalk&) = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(vertices_, weights_);
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Weight> weights_;
};

// Empty string when `walk` is a valid walk of `g` with matching edge weights;
// otherwise a description of the first defect.
std::string walk_defect(const WeightedGraph& g, const PathWalk& walk);
inline bool is_valid_walk(const WeightedGraph& g, const PathWalk& walk) { return walk_defect(g, walk).empty(); }

}  // namespace pathoracle
