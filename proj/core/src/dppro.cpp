#include "pathoracle/dppro.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>
#include <string>

#include "pathoracle/errors.hpp"
#include "pathoracle/hashing.hpp"
#include "pathoracle/parallel.hpp"

namespace pathoracle {

PairSet::PairSet(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  pairs_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u == v) throw ParameterError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is degenerate");
    pairs_.push_back(VertexPair::canonical(u, v));
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet::PairSet(std::vector<VertexPair> pairs) {
  for (VertexPair& p : pairs) {
    if (p.a == p.b) throw ParameterError("pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ") is degenerate");
    p = VertexPair::canonical(p.a, p.b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);
}

bool PairSet::contains(Vertex u, Vertex v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair::canonical(u, v));
}

std::size_t Dppro::EventKeyHash::operator()(const EventKey& k) const {
  return static_cast<std::size_t>(mix64((static_cast<std::uint64_t>(k.lower) << 32) | k.upper, k.vertex));
}

Dppro Dppro::build(const WeightedGraph& g, const PairSet& pairs, const CanonicalPathSystem& system) {
  std::vector<PathWalk> paths(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const VertexPair p = pairs.pairs()[i];
    const bool from_a = system.has_source(p.a);
    if (!from_a && !system.has_source(p.b)) {
      throw ParameterError("path system has no tree for either endpoint of pair (" + std::to_string(p.a) + "," +
                           std::to_string(p.b) + ")");
    }
    const ShortestPathTree& tree = system.tree(from_a ? p.a : p.b);
    const Vertex target = from_a ? p.b : p.a;
    if (!tree.reaches(target)) {
      throw DisconnectedError("pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ") is not connected");
    }
    PathWalk walk = extract_path(g, tree, target);
    paths[i] = from_a ? std::move(walk) : walk.reversed();
  });
  return from_paths(g.num_vertices(), pairs, paths);
}

Dppro Dppro::from_paths(Vertex n, const PairSet& pairs, const std::vector<PathWalk>& paths) {
  if (paths.size() != pairs.size()) throw std::invalid_argument("Dppro: one path per pair required");
  Dppro o;
  o.pairs_ = pairs;
  o.home_.assign(n, HomeRecord{});
  o.records_.resize(pairs.size());
  o.index_.reserve(pairs.size());

  struct Incidence {
    Vertex vertex;
    PathId path;
    Vertex prev;
    Vertex next;
    Weight prev_w;
    Weight next_w;
  };
  std::vector<Incidence> incidences;

  for (PathId id = 0; id < pairs.size(); ++id) {
    const VertexPair p = pairs.pairs()[id];
    const PathWalk& walk = paths[id];
    const auto& vs = walk.vertices();
    const auto& ws = walk.weights();
    if (walk.hop_count() == 0 || vs.front() != p.a || vs.back() != p.b) {
      throw std::invalid_argument("Dppro: path " + std::to_string(id) + " does not connect its pair");
    }
    o.index_.emplace(pair_key(p.a, p.b), id);
    o.records_[id] = {vs[1], vs[vs.size() - 2], ws.front(), ws.back()};
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Incidence inc{vs[i], id, kNoVertex, kNoVertex, 0, 0};
      if (i > 0) {
        inc.prev = vs[i - 1];
        inc.prev_w = ws[i - 1];
      }
      if (i + 1 < vs.size()) {
        inc.next = vs[i + 1];
        inc.next_w = ws[i];
      }
      incidences.push_back(inc);
      // Paths are visited in id order, so the first claim is the smallest id.
      if (i > 0 && i + 1 < vs.size() && o.home_[vs[i]].path == kNoPath) {
        o.home_[vs[i]] = {id, inc.prev, inc.next, inc.prev_w, inc.next_w};
      }
    }
  }

  std::sort(incidences.begin(), incidences.end(), [](const Incidence& x, const Incidence& y) {
    return x.vertex != y.vertex ? x.vertex < y.vertex : x.path < y.path;
  });
  auto same_edges = [](const Incidence& x, const Incidence& y) {
    return (x.prev == y.prev && x.next == y.next) || (x.prev == y.next && x.next == y.prev);
  };
  for (std::size_t lo = 0; lo < incidences.size();) {
    std::size_t hi = lo;
    while (hi < incidences.size() && incidences[hi].vertex == incidences[lo].vertex) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        const Incidence& x = incidences[i];
        const Incidence& y = incidences[j];
        if (same_edges(x, y)) continue;
        EventRecord rec;
        rec.prev[0] = x.prev;
        rec.next[0] = x.next;
        rec.prev_w[0] = x.prev_w;
        rec.next_w[0] = x.next_w;
        rec.prev[1] = y.prev;
        rec.next[1] = y.next;
        rec.prev_w[1] = y.prev_w;
        rec.next_w[1] = y.next_w;
        o.events_.emplace(EventKey{x.path, y.path, x.vertex}, rec);
      }
    }
    lo = hi;
  }
  return o;
}

PathWalk Dppro::walk_stored(PathId id, std::size_t* probes) const {
  const VertexPair p = pairs_.pairs()[id];
  const PairRecord& rec = records_[id];
  std::size_t count = 0;
  PathWalk walk(p.a);
  walk.push(rec.first_hop, rec.first_w);
  Vertex prev = p.a;
  Vertex cur = rec.first_hop;
  while (cur != p.b) {
    if (cur == rec.last_hop) {
      walk.push(p.b, rec.last_w);
      break;
    }
    ++count;
    const HomeRecord& home = home_[cur];
    if (home.path == kNoPath) throw std::logic_error("Dppro: internal vertex without a home path");
    Vertex next;
    Weight w;
    if (home.path == id) {
      next = home.next;
      w = home.next_w;
    } else {
      ++count;
      const EventKey key{std::min(id, home.path), std::max(id, home.path), cur};
      auto ev = events_.find(key);
      if (ev == events_.end()) {
        // No branching here: both paths use the same two edges at cur.
        const bool forward = home.prev == prev;
        next = forward ? home.next : home.prev;
        w = forward ? home.next_w : home.prev_w;
      } else {
        const int side = id < home.path ? 0 : 1;
        next = ev->second.next[side];
        w = ev->second.next_w[side];
      }
    }
    walk.push(next, w);
    prev = cur;
    cur = next;
  }
  if (probes != nullptr) *probes += count;
  return walk;
}

PathWalk Dppro::query(Vertex u, Vertex v, std::size_t* probes) const {
  auto it = index_.find(pair_key(u, v));
  if (probes != nullptr) ++*probes;
  if (it == index_.end()) {
    throw NotInPairsError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not stored");
  }
  PathWalk walk = walk_stored(it->second, probes);
  return u < v ? walk : walk.reversed();
}

DpproSpace Dppro::space_report() const {
  DpproSpace s;
  s.home_entries = static_cast<std::size_t>(
      std::count_if(home_.begin(), home_.end(), [](const HomeRecord& h) { return h.path != kNoPath; }));
  s.event_count = events_.size();
  s.pair_count = pairs_.size();
  s.n_words = s.home_entries * DpproSpace::kHomeWords;
  s.branch_words = s.event_count * DpproSpace::kEventWords;
  s.pair_words = s.pair_count * DpproSpace::kPairWords;
  return s;
}

std::size_t Dppro::max_events_per_path_pair() const {
  std::map<std::pair<PathId, PathId>, std::size_t> per_pair;
  std::size_t best = 0;
  for (const auto& [key, _] : events_) best = std::max(best, ++per_pair[{key.lower, key.upper}]);
  return best;
}

std::vector<Dppro::Event> Dppro::events() const {
  std::vector<Event> out;
  out.reserve(events_.size());
  for (const auto& [key, _] : events_) out.push_back({key.lower, key.upper, key.vertex});
  std::sort(out.begin(), out.end(), [](const Event& x, const Event& y) {
    return std::tie(x.lower_path, x.upper_path, x.vertex) < std::tie(y.lower_path, y.upper_path, y.vertex);
  });
  return out;
}

}  // namespace pathoracle
