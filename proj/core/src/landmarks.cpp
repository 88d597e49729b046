#include "pathoracle/landmarks.hpp"

#include <functional>
#include <queue>
#include <tuple>

#include "pathoracle/errors.hpp"

namespace pathoracle {

NearestLandmarkForest NearestLandmarkForest::build(const WeightedGraph& g, const std::vector<Vertex>& landmarks) {
  if (landmarks.empty()) throw ParameterError("landmark forest needs at least one landmark");
  const Vertex n = g.num_vertices();
  NearestLandmarkForest f;
  f.root_.assign(n, kNoVertex);
  f.dist_.assign(n, kInfinity);
  f.parent_.assign(n, kNoVertex);
  f.parent_w_.assign(n, 0);
  std::vector<TieKey> tie(n, 0);
  std::vector<char> done(n, 0);

  // Labels compare by (dist, root id, tiebreak): the nearest landmark with the
  // smallest id wins, and the path inside its tree is canonical.
  using Item = std::tuple<Weight, Vertex, TieKey, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Vertex l : landmarks) {
    if (l >= n) throw ParameterError("landmark id out of range");
    f.root_[l] = l;
    f.dist_[l] = 0;
    heap.emplace(0, l, 0, l);
  }
  auto better = [&](Weight d, Vertex r, TieKey t, Vertex v) {
    return std::tie(d, r, t) < std::tie(f.dist_[v], f.root_[v], tie[v]);
  };
  while (!heap.empty()) {
    auto [d, r, t, x] = heap.top();
    heap.pop();
    if (done[x] || d != f.dist_[x] || r != f.root_[x] || t != tie[x]) continue;
    done[x] = 1;
    for (const Arc& a : g.neighbors(x)) {
      if (done[a.to]) continue;
      const Weight nd = d + a.w;
      const TieKey nt = t + g.edge(a.id).key;
      if (f.root_[a.to] == kNoVertex || better(nd, r, nt, a.to)) {
        f.dist_[a.to] = nd;
        f.root_[a.to] = r;
        tie[a.to] = nt;
        f.parent_[a.to] = x;
        f.parent_w_[a.to] = a.w;
        heap.emplace(nd, r, nt, a.to);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (f.root_[v] == kNoVertex) {
      throw DisconnectedError("vertex " + std::to_string(v) + " cannot reach any landmark");
    }
  }
  return f;
}

PathWalk NearestLandmarkForest::path_to_root(Vertex v) const {
  PathWalk walk(v);
  while (parent_[v] != kNoVertex) {
    walk.push(parent_[v], parent_w_[v]);
    v = parent_[v];
  }
  return walk;
}

}  // namespace pathoracle
