#include "pathoracle/path_walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathoracle {

PathWalk PathWalk::from_parts(std::vector<Vertex> vertices, std::vector<Weight> weights) {
  if (vertices.empty() ? !weights.empty() : weights.size() + 1 != vertices.size()) {
    throw std::invalid_argument("PathWalk: need exactly one weight per hop");
  }
  PathWalk walk;
  walk.vertices_ = std::move(vertices);
  walk.weights_ = std::move(weights);
  return walk;
}

Weight PathWalk::length() const {
  Weight total = 0;
  for (Weight w : weights_) total += w;
  return total;
}

void PathWalk::append(const PathWalk& tail) {
  if (tail.empty()) return;
  if (empty()) {
    *this = tail;
    return;
  }
  if (tail.front() != back()) throw std::logic_error("PathWalk::append: endpoints do not meet");
  vertices_.insert(vertices_.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
  weights_.insert(weights_.end(), tail.weights_.begin(), tail.weights_.end());
}

void PathWalk::append_reversed(const PathWalk& tail) {
  if (tail.empty()) return;
  if (empty()) {
    *this = tail.reversed();
    return;
  }
  if (tail.back() != back()) throw std::logic_error("PathWalk::append_reversed: endpoints do not meet");
  vertices_.insert(vertices_.end(), tail.vertices_.rbegin() + 1, tail.vertices_.rend());
  weights_.insert(weights_.end(), tail.weights_.rbegin(), tail.weights_.rend());
}

PathWalk PathWalk::reversed() const {
  PathWalk r;
  r.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  r.weights_.assign(weights_.rbegin(), weights_.rend());
  return r;
}

std::string walk_defect(const WeightedGraph& g, const PathWalk& walk) {
  if (walk.empty()) return "empty walk";
  const auto& vs = walk.vertices();
  for (Vertex v : vs) {
    if (v >= g.num_vertices()) return "vertex " + std::to_string(v) + " out of range";
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto id = g.find_edge(vs[i], vs[i + 1]);
    if (!id) return "no edge (" + std::to_string(vs[i]) + "," + std::to_string(vs[i + 1]) + ")";
    if (g.edge(*id).w != walk.weights()[i]) {
      return "weight mismatch on (" + std::to_string(vs[i]) + "," + std::to_string(vs[i + 1]) + ")";
    }
  }
  return {};
}

}  // namespace pathoracle
