#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pathoracle/errors.hpp"
#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"

namespace pathoracle {

// Search label. Paths are ranked by (dist, tiebreak) lexicographically, where
// tiebreak is the sum of the per-edge keys; with random keys the minimum is
// unique with overwhelming probability, which makes every shortest path
// canonical and closed under taking subpaths.
struct Label {
  Weight dist = kInfinity;
  TieKey tiebreak = 0;
  EdgeId pred = kNoEdge;
};

inline bool label_less(Weight d1, TieKey t1, Weight d2, TieKey t2) {
  return d1 < d2 || (d1 == d2 && t1 < t2);
}

/// Dense scratch arrays reused across searches; reset() is O(1) amortized.
class SearchWorkspace {
 public:
  void reset(Vertex n);

  bool reached(Vertex v) const { return stamp_[v] == epoch_; }
  bool settled(Vertex v) const { return settled_[v] == epoch_; }
  const Label& label(Vertex v) const { return labels_[v]; }

  void set_label(Vertex v, const Label& l) {
    if (stamp_[v] != epoch_) {
      stamp_[v] = epoch_;
      touched_.push_back(v);
    }
    labels_[v] = l;
  }
  void settle(Vertex v) { settled_[v] = epoch_; }
  const std::vector<Vertex>& touched() const { return touched_; }

 private:
  std::vector<Label> labels_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> settled_;
  std::vector<Vertex> touched_;
  std::uint32_t epoch_ = 0;
};

// Per-thread workspace sized for at least n vertices.
SearchWorkspace& thread_workspace(Vertex n);

namespace detail {

struct HeapItem {
  Weight dist;
  std::uint8_t rank;
  TieKey tiebreak;
  Vertex v;
  bool operator>(const HeapItem& o) const {
    if (dist != o.dist) return dist > o.dist;
    if (rank != o.rank) return rank > o.rank;
    if (tiebreak != o.tiebreak) return tiebreak > o.tiebreak;
    return v > o.v;
  }
};

struct SearchLimit {
  Weight limit = kInfinity;
  bool inclusive = true;
  bool admits(Weight d) const { return inclusive ? d <= limit : d < limit; }
};

// Canonical Dijkstra core. `rank(v)` orders vertices of equal distance at pop
// time (lower first) without affecting labels; `on_settle(v)` returns false to
// stop. Arcs whose tentative distance falls outside `limit` are skipped, and
// since arcs are sorted by weight, so is the rest of that vertex's list.
template <class RankFn, class SettleFn>
std::size_t canonical_search(const WeightedGraph& g, Vertex source, SearchWorkspace& ws, SearchLimit limit,
                             RankFn rank, SettleFn on_settle) {
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  ws.set_label(source, {0, 0, kNoEdge});
  heap.push({0, rank(source), 0, source});
  std::size_t scanned = 0;
  while (!heap.empty()) {
    const HeapItem top = heap.top();
    heap.pop();
    if (ws.settled(top.v)) continue;
    const Label& cur = ws.label(top.v);
    if (cur.dist != top.dist || cur.tiebreak != top.tiebreak) continue;
    ws.settle(top.v);
    if (!on_settle(top.v)) return scanned;
    for (const Arc& a : g.neighbors(top.v)) {
      const Weight nd = top.dist + a.w;
      if (!limit.admits(nd)) break;
      ++scanned;
      if (ws.settled(a.to)) continue;
      const TieKey nt = top.tiebreak + g.edge(a.id).key;
      if (!ws.reached(a.to) || label_less(nd, nt, ws.label(a.to).dist, ws.label(a.to).tiebreak)) {
        ws.set_label(a.to, {nd, nt, a.id});
        heap.push({nd, rank(a.to), nt, a.to});
      }
    }
  }
  return scanned;
}

// Walk from the search source to `target` along recorded predecessor edges.
PathWalk path_from_workspace(const WeightedGraph& g, const SearchWorkspace& ws, Vertex target);

}  // namespace detail

/// Shortest-path tree of one source: dense over all vertices, or sparse over
/// the vertices settled by a radius-bounded search.
class ShortestPathTree {
 public:
  ShortestPathTree() = default;

  static ShortestPathTree dense(Vertex source, std::vector<Label> labels);
  static ShortestPathTree sparse(Vertex source, std::vector<std::pair<Vertex, Label>> settled);

  Vertex source() const { return source_; }
  bool reaches(Vertex v) const { return find(v) != nullptr; }
  Weight dist(Vertex v) const {
    const Label* l = find(v);
    return l ? l->dist : kInfinity;
  }
  EdgeId pred(Vertex v) const {
    const Label* l = find(v);
    return l ? l->pred : kNoEdge;
  }
  TieKey tiebreak(Vertex v) const {
    const Label* l = find(v);
    return l ? l->tiebreak : 0;
  }
  std::size_t reached_count() const;

 private:
  const Label* find(Vertex v) const;

  Vertex source_ = kNoVertex;
  bool dense_ = true;
  std::vector<Label> labels_;                         // dense
  std::vector<std::pair<Vertex, Label>> settled_;     // sparse, sorted by vertex
};

/// Full canonical Dijkstra from `source`. Unreachable vertices keep dist = +inf.
ShortestPathTree dijkstra_canonical(const WeightedGraph& g, Vertex source);

/// Canonical Dijkstra restricted to vertices at distance strictly below `radius`.
/// Every canonical path to a settled vertex lies entirely inside the ball, so
/// paths extracted from this tree are the same as from a full tree.
ShortestPathTree dijkstra_canonical_bounded(const WeightedGraph& g, Vertex source, Weight radius);

/// Trees for a set of sources over one graph.
class CanonicalPathSystem {
 public:
  explicit CanonicalPathSystem(const WeightedGraph& g) : graph_(&g) {}

  const WeightedGraph& graph() const { return *graph_; }

  // Full trees for each source (computed in parallel when threads are available).
  void add_sources(const std::vector<Vertex>& sources);
  void add_tree(ShortestPathTree tree);

  bool has_source(Vertex s) const { return trees_.count(s) != 0; }
  const ShortestPathTree& tree(Vertex s) const;
  std::vector<Vertex> sources() const;

 private:
  const WeightedGraph* graph_;
  std::map<Vertex, ShortestPathTree> trees_;
};

PathWalk extract_path(const WeightedGraph& g, const ShortestPathTree& tree, Vertex target);
PathWalk extract_path(const CanonicalPathSystem& system, Vertex source, Vertex target);

enum class BallOutcome { kFoundTarget, kFoundStopper };

struct BallResult {
  BallOutcome outcome = BallOutcome::kFoundStopper;
  Vertex meeting_vertex = kNoVertex;
  std::vector<std::pair<Vertex, Weight>> explored;  // settle order, meeting vertex last
  std::size_t edges_scanned = 0;
  PathWalk path;  // canonical path source -> meeting vertex
};

/// Dijkstra from `source` that halts at the first settled vertex which is a
/// stopper or equals `target`. Among vertices at equal distance stoppers are
/// settled first, so kFoundTarget means d(source,target) is strictly smaller
/// than the distance to every stopper. When `cutoff` is the known stopper
/// distance, arcs beyond it are not relaxed.
template <class StopFn>
BallResult truncated_ball_search(const WeightedGraph& g, Vertex source, StopFn is_stopper,
                                 std::optional<Vertex> target = std::nullopt,
                                 std::optional<Weight> cutoff = std::nullopt) {
  if (source >= g.num_vertices()) throw ParameterError("ball search source out of range");
  SearchWorkspace& ws = thread_workspace(g.num_vertices());
  ws.reset(g.num_vertices());
  BallResult result;
  const Vertex tgt = target.value_or(kNoVertex);
  auto rank = [&](Vertex v) -> std::uint8_t { return is_stopper(v) ? 0 : (v == tgt ? 1 : 2); };
  bool found = false;
  auto on_settle = [&](Vertex v) {
    result.explored.emplace_back(v, ws.label(v).dist);
    if (is_stopper(v)) {
      result.outcome = BallOutcome::kFoundStopper;
    } else if (v == tgt) {
      result.outcome = BallOutcome::kFoundTarget;
    } else {
      return true;
    }
    result.meeting_vertex = v;
    found = true;
    return false;
  };
  result.edges_scanned = detail::canonical_search(g, source, ws, {cutoff.value_or(kInfinity), true}, rank, on_settle);
  if (!found) {
    throw DisconnectedError("ball search from " + std::to_string(source) +
                            " exhausted its component without meeting a stopper or the target");
  }
  result.path = detail::path_from_workspace(g, ws, result.meeting_vertex);
  return result;
}

// Plain Dijkstra distances with no tie-breaking; the verification baseline.
std::vector<Weight> exact_distances(const WeightedGraph& g, Vertex source);

}  // namespace pathoracle
