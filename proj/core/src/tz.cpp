#include "pathoracle/tz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

#include "pathoracle/errors.hpp"
#include "pathoracle/hashing.hpp"
#include "pathoracle/landmarks.hpp"

namespace pathoracle {

bool UnionSpanner::contains(Vertex u, Vertex v) const {
  return std::binary_search(pairs.begin(), pairs.end(), VertexPair::canonical(u, v));
}

namespace {

bool has_empty_level(const std::vector<std::vector<Vertex>>& levels) {
  return std::any_of(levels.begin(), levels.end(), [](const auto& l) { return l.empty(); });
}

}  // namespace

TzOracle TzOracle::build_once(const WeightedGraph& host, int k, std::uint64_t seed) {
  const Vertex n = host.num_vertices();
  const auto levels = static_cast<std::size_t>(k);
  TzOracle o;
  o.k_ = k;
  o.levels_.resize(levels);
  o.levels_[0].resize(n);
  for (Vertex v = 0; v < n; ++v) o.levels_[0][v] = v;
  const double keep = std::pow(static_cast<double>(n), -1.0 / k);
  for (std::size_t i = 1; i < levels; ++i) {
    for (Vertex v : o.levels_[i - 1]) {
      if (unit_interval(mix64(seed, (static_cast<std::uint64_t>(i) << 32) | v)) < keep) o.levels_[i].push_back(v);
    }
  }

  // Witnesses top-down; p_i(v) = p_{i+1}(v) whenever the two distances tie, which
  // guarantees p_i(v) is in v's bunch.
  o.witness_.assign(levels + 1, std::vector<Vertex>(n, kNoVertex));
  o.witness_dist_.assign(levels + 1, std::vector<Weight>(n, kInfinity));
  for (std::size_t i = levels; i-- > 0;) {
    if (o.levels_[i].empty()) continue;
    const NearestLandmarkForest nearest = NearestLandmarkForest::build(host, o.levels_[i]);
    for (Vertex v = 0; v < n; ++v) {
      if (nearest.dist(v) == o.witness_dist_[i + 1][v]) {
        o.witness_[i][v] = o.witness_[i + 1][v];
      } else {
        o.witness_[i][v] = nearest.root(v);
      }
      o.witness_dist_[i][v] = nearest.dist(v);
    }
  }

  // Cluster of w in A_i \ A_{i+1}: vertices x with d(w,x) < d(x, A_{i+1}),
  // grown as a canonical shortest-path tree from w.
  o.bunches_.assign(n, {});
  std::vector<char> in_next(n, 0);
  std::vector<Weight> dist(n, kInfinity);
  std::vector<TieKey> tie(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Weight> parent_w(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> touched;
  using Item = std::tuple<Weight, TieKey, Vertex>;
  for (std::size_t i = 0; i < levels; ++i) {
    std::fill(in_next.begin(), in_next.end(), 0);
    if (i + 1 < levels) {
      for (Vertex v : o.levels_[i + 1]) in_next[v] = 1;
    }
    const std::vector<Weight>& bound = o.witness_dist_[i + 1];
    for (Vertex w : o.levels_[i]) {
      if (in_next[w]) continue;
      for (Vertex x : touched) {
        dist[x] = kInfinity;
        done[x] = 0;
        parent[x] = kNoVertex;
      }
      touched.clear();
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      dist[w] = 0;
      tie[w] = 0;
      touched.push_back(w);
      heap.emplace(0, 0, w);
      while (!heap.empty()) {
        auto [d, t, x] = heap.top();
        heap.pop();
        if (done[x] || d != dist[x] || t != tie[x]) continue;
        done[x] = 1;
        o.bunches_[x][w] = {d, parent[x], parent_w[x]};
        for (const Arc& a : host.neighbors(x)) {
          const Weight nd = d + a.w;
          if (!(nd < bound[a.to]) || done[a.to]) continue;
          const TieKey nt = t + host.edge(a.id).key;
          if (dist[a.to] == kInfinity) touched.push_back(a.to);
          if (nd < dist[a.to] || (nd == dist[a.to] && nt < tie[a.to])) {
            dist[a.to] = nd;
            tie[a.to] = nt;
            parent[a.to] = x;
            parent_w[a.to] = a.w;
            heap.emplace(nd, nt, a.to);
          }
        }
      }
    }
  }
  o.witness_.pop_back();
  o.witness_dist_.pop_back();
  return o;
}

TzOracle TzOracle::build(const WeightedGraph& host, const TzConfig& config) {
  if (config.k < 1) throw ParameterError("TZ oracle needs k >= 1");
  if (host.num_vertices() == 0) throw ParameterError("TZ oracle needs a nonempty host");
  if (!host.is_connected()) throw DisconnectedError("TZ host graph is not connected");
  const double n = host.num_vertices();
  const auto cap = static_cast<std::size_t>(config.size_cap_constant * config.k * std::pow(n, 1.0 + 1.0 / config.k));
  TzOracle best;
  std::size_t best_size = 0;
  bool best_complete = false;
  const int attempts = std::max(0, config.size_cap_retries) + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    TzOracle candidate = build_once(host, config.k, mix64(config.seed, static_cast<std::uint64_t>(attempt)));
    const bool complete = !has_empty_level(candidate.levels_);
    const std::size_t size = extract_union_spanner(candidate).size();
    const bool better = attempt == 0 || (complete && !best_complete) || (complete == best_complete && size < best_size);
    if (better) {
      best = std::move(candidate);
      best_size = size;
      best_complete = complete;
    }
    best.attempts_ = attempt + 1;
    if (best_complete && best_size <= cap) break;
  }
  best.size_cap_ = cap;
  return best;
}

std::optional<Weight> TzOracle::bunch_dist(Vertex v, Vertex w) const {
  auto it = bunches_[v].find(w);
  if (it == bunches_[v].end()) return std::nullopt;
  return it->second.dist;
}

PathWalk TzOracle::cluster_path(Vertex from, Vertex center) const {
  PathWalk walk(from);
  Vertex cur = from;
  while (cur != center) {
    const BunchEntry& e = bunches_[cur].at(center);
    walk.push(e.parent, e.parent_w);
    cur = e.parent;
  }
  return walk;
}

PathWalk TzOracle::query(Vertex u, Vertex v, std::size_t* probes) const {
  if (u >= num_vertices() || v >= num_vertices()) throw ParameterError("TZ query vertex out of range");
  std::size_t count = 0;
  if (u == v) return PathWalk(u);
  Vertex w = u;
  std::size_t i = 0;
  while (++count, !bunches_[v].count(w)) {
    ++i;
    std::swap(u, v);
    w = witness_[i][u];
    ++count;
  }
  if (probes != nullptr) *probes += count;
  PathWalk walk = cluster_path(u, w);
  walk.append_reversed(cluster_path(v, w));
  // Each ascent step swaps the endpoints; odd i means u and v trade places.
  return i % 2 == 0 ? walk : walk.reversed();
}

std::size_t TzOracle::word_count() const {
  std::size_t words = 2 * static_cast<std::size_t>(k_) * bunches_.size();
  for (const auto& b : bunches_) words += 3 * b.size();
  return words;
}

UnionSpanner extract_union_spanner(const TzOracle& oracle) {
  UnionSpanner h;
  for (Vertex x = 0; x < oracle.bunches_.size(); ++x) {
    for (const auto& [center, entry] : oracle.bunches_[x]) {
      if (center != x) h.pairs.push_back(VertexPair::canonical(x, entry.parent));
    }
  }
  std::sort(h.pairs.begin(), h.pairs.end());
  h.pairs.erase(std::unique(h.pairs.begin(), h.pairs.end()), h.pairs.end());
  return h;
}

}  // namespace pathoracle
