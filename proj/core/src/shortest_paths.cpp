#include "pathoracle/shortest_paths.hpp"

#include <algorithm>
#include <functional>

#include "pathoracle/parallel.hpp"

namespace pathoracle {

void SearchWorkspace::reset(Vertex n) {
  if (labels_.size() < n) {
    labels_.resize(n);
    stamp_.resize(n, 0);
    settled_.resize(n, 0);
  }
  touched_.clear();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    std::fill(settled_.begin(), settled_.end(), 0);
    epoch_ = 1;
  }
}

SearchWorkspace& thread_workspace(Vertex n) {
  thread_local SearchWorkspace ws;
  (void)n;
  return ws;
}

namespace detail {

PathWalk path_from_workspace(const WeightedGraph& g, const SearchWorkspace& ws, Vertex target) {
  std::vector<Vertex> vertices{target};
  std::vector<Weight> weights;
  Vertex cur = target;
  while (ws.label(cur).pred != kNoEdge) {
    const Edge& e = g.edge(ws.label(cur).pred);
    weights.push_back(e.w);
    cur = e.other(cur);
    vertices.push_back(cur);
  }
  std::reverse(vertices.begin(), vertices.end());
  std::reverse(weights.begin(), weights.end());
  return PathWalk::from_parts(std::move(vertices), std::move(weights));
}

}  // namespace detail

ShortestPathTree ShortestPathTree::dense(Vertex source, std::vector<Label> labels) {
  ShortestPathTree t;
  t.source_ = source;
  t.dense_ = true;
  t.labels_ = std::move(labels);
  return t;
}

ShortestPathTree ShortestPathTree::sparse(Vertex source, std::vector<std::pair<Vertex, Label>> settled) {
  ShortestPathTree t;
  t.source_ = source;
  t.dense_ = false;
  std::sort(settled.begin(), settled.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  t.settled_ = std::move(settled);
  return t;
}

const Label* ShortestPathTree::find(Vertex v) const {
  if (dense_) {
    if (v >= labels_.size() || labels_[v].dist == kInfinity) return nullptr;
    return &labels_[v];
  }
  auto it = std::lower_bound(settled_.begin(), settled_.end(), v,
                             [](const auto& entry, Vertex x) { return entry.first < x; });
  if (it == settled_.end() || it->first != v) return nullptr;
  return &it->second;
}

std::size_t ShortestPathTree::reached_count() const {
  if (!dense_) return settled_.size();
  return static_cast<std::size_t>(
      std::count_if(labels_.begin(), labels_.end(), [](const Label& l) { return l.dist != kInfinity; }));
}

ShortestPathTree dijkstra_canonical(const WeightedGraph& g, Vertex source) {
  if (source >= g.num_vertices()) throw ParameterError("dijkstra source out of range");
  SearchWorkspace& ws = thread_workspace(g.num_vertices());
  ws.reset(g.num_vertices());
  detail::canonical_search(g, source, ws, {}, [](Vertex) -> std::uint8_t { return 0; },
                           [](Vertex) { return true; });
  std::vector<Label> labels(g.num_vertices());
  for (Vertex v : ws.touched()) labels[v] = ws.label(v);
  return ShortestPathTree::dense(source, std::move(labels));
}

ShortestPathTree dijkstra_canonical_bounded(const WeightedGraph& g, Vertex source, Weight radius) {
  if (source >= g.num_vertices()) throw ParameterError("dijkstra source out of range");
  SearchWorkspace& ws = thread_workspace(g.num_vertices());
  ws.reset(g.num_vertices());
  std::vector<std::pair<Vertex, Label>> settled;
  if (radius > 0) {
    detail::canonical_search(g, source, ws, {radius, false}, [](Vertex) -> std::uint8_t { return 0; },
                             [&](Vertex v) {
                               settled.emplace_back(v, ws.label(v));
                               return true;
                             });
  }
  return ShortestPathTree::sparse(source, std::move(settled));
}

void CanonicalPathSystem::add_sources(const std::vector<Vertex>& sources) {
  std::vector<ShortestPathTree> trees(sources.size());
  parallel_for(sources.size(), [&](std::size_t i) { trees[i] = dijkstra_canonical(*graph_, sources[i]); });
  for (auto& t : trees) add_tree(std::move(t));
}

void CanonicalPathSystem::add_tree(ShortestPathTree tree) {
  const Vertex s = tree.source();
  trees_.insert_or_assign(s, std::move(tree));
}

const ShortestPathTree& CanonicalPathSystem::tree(Vertex s) const {
  auto it = trees_.find(s);
  if (it == trees_.end()) throw ParameterError("no shortest-path tree for source " + std::to_string(s));
  return it->second;
}

std::vector<Vertex> CanonicalPathSystem::sources() const {
  std::vector<Vertex> out;
  out.reserve(trees_.size());
  for (const auto& [s, _] : trees_) out.push_back(s);
  return out;
}

PathWalk extract_path(const WeightedGraph& g, const ShortestPathTree& tree, Vertex target) {
  if (!tree.reaches(target)) {
    throw NoPathError("no path from " + std::to_string(tree.source()) + " to " + std::to_string(target));
  }
  std::vector<Vertex> vertices{target};
  std::vector<Weight> weights;
  Vertex cur = target;
  while (cur != tree.source()) {
    const Edge& e = g.edge(tree.pred(cur));
    weights.push_back(e.w);
    cur = e.other(cur);
    vertices.push_back(cur);
  }
  std::reverse(vertices.begin(), vertices.end());
  std::reverse(weights.begin(), weights.end());
  return PathWalk::from_parts(std::move(vertices), std::move(weights));
}

PathWalk extract_path(const CanonicalPathSystem& system, Vertex source, Vertex target) {
  return extract_path(system.graph(), system.tree(source), target);
}

std::vector<Weight> exact_distances(const WeightedGraph& g, Vertex source) {
  std::vector<Weight> dist(g.num_vertices(), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const Arc& a : g.neighbors(x)) {
      if (d + a.w < dist[a.to]) {
        dist[a.to] = d + a.w;
        heap.emplace(dist[a.to], a.to);
      }
    }
  }
  return dist;
}

}  // namespace pathoracle
