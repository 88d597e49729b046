#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"
#include "pathoracle/shortest_paths.hpp"

namespace pathoracle {

using PathId = std::uint32_t;
inline constexpr PathId kNoPath = std::numeric_limits<PathId>::max();

// Unordered pair stored as (smaller, larger).
struct VertexPair {
  Vertex a = 0;
  Vertex b = 0;

  static VertexPair canonical(Vertex u, Vertex v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }
  auto operator<=>(const VertexPair&) const = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(a, b);
  }
};

class PairSet {
 public:
  PairSet() = default;
  // Normalizes orientation and drops duplicates; throws ParameterError on (v,v).
  explicit PairSet(const std::vector<std::pair<Vertex, Vertex>>& pairs);
  explicit PairSet(std::vector<VertexPair> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<VertexPair>& pairs() const { return pairs_; }
  bool contains(Vertex u, Vertex v) const;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(pairs_);
  }

 private:
  std::vector<VertexPair> pairs_;  // sorted, unique
};

// Table sizes of a built oracle. Words are counted per stored record: a home
// entry holds a path id and two edges, a branching event its key (two path
// ids and a vertex) plus up to four edges, a pair its key plus first and last
// edge.
struct DpproSpace {
  static constexpr std::size_t kHomeWords = 3;
  static constexpr std::size_t kEventWords = 7;
  static constexpr std::size_t kPairWords = 4;

  std::size_t home_entries = 0;
  std::size_t event_count = 0;
  std::size_t pair_count = 0;
  std::size_t n_words = 0;
  std::size_t branch_words = 0;
  std::size_t pair_words = 0;

  std::size_t total_words() const { return n_words + branch_words + pair_words; }
};

/// Exact path-reporting oracle restricted to a fixed pair set. Stores one home
/// path per internal vertex, the branching events between stored paths, and
/// the first and last edge of each stored path; a query walks the path
/// forward with O(1) table probes per reported edge.
class Dppro {
 public:
  struct Event {
    PathId lower_path;
    PathId upper_path;
    Vertex vertex;
  };

  Dppro() = default;

  /// Paths come from `system` (a tree rooted at either endpoint of each pair).
  static Dppro build(const WeightedGraph& g, const PairSet& pairs, const CanonicalPathSystem& system);

  /// `paths[i]` must run from pairs.pairs()[i].a to pairs.pairs()[i].b, and the
  /// collection must be consistent: two paths through x and y share the whole
  /// x..y subpath (canonical shortest paths have this property).
  static Dppro from_paths(Vertex n, const PairSet& pairs, const std::vector<PathWalk>& paths);

  /// Stored path u -> v (reversed if the pair is stored as (v,u)).
  /// Throws NotInPairsError for pairs outside the set. `probes`, when given,
  /// is incremented once per table read.
  PathWalk query(Vertex u, Vertex v, std::size_t* probes = nullptr) const;

  bool contains(Vertex u, Vertex v) const { return index_.count(pair_key(u, v)) != 0; }

  const PairSet& pairs() const { return pairs_; }
  Vertex num_vertices() const { return static_cast<Vertex>(home_.size()); }
  DpproSpace space_report() const;
  std::size_t event_count() const { return events_.size(); }
  std::size_t max_events_per_path_pair() const;
  std::vector<Event> events() const;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(pairs_, home_, records_, index_, events_);
  }

 private:
  struct HomeRecord {
    PathId path = kNoPath;
    Vertex prev = kNoVertex;
    Vertex next = kNoVertex;
    Weight prev_w = 0;
    Weight next_w = 0;

    template <class Archive>
    void serialize(Archive& ar) {
      ar(path, prev, next, prev_w, next_w);
    }
  };

  struct PairRecord {
    Vertex first_hop = kNoVertex;
    Vertex last_hop = kNoVertex;
    Weight first_w = 0;
    Weight last_w = 0;

    template <class Archive>
    void serialize(Archive& ar) {
      ar(first_hop, last_hop, first_w, last_w);
    }
  };

  struct EventKey {
    PathId lower = 0;
    PathId upper = 0;
    Vertex vertex = 0;
    bool operator==(const EventKey&) const = default;

    template <class Archive>
    void serialize(Archive& ar) {
      ar(lower, upper, vertex);
    }
  };

  struct EventKeyHash {
    std::size_t operator()(const EventKey& k) const;
  };

  // Incident edges of both paths at the event vertex; side 0 is the lower path id.
  struct EventRecord {
    Vertex prev[2] = {kNoVertex, kNoVertex};
    Vertex next[2] = {kNoVertex, kNoVertex};
    Weight prev_w[2] = {0, 0};
    Weight next_w[2] = {0, 0};

    template <class Archive>
    void serialize(Archive& ar) {
      ar(prev[0], prev[1], next[0], next[1], prev_w[0], prev_w[1], next_w[0], next_w[1]);
    }
  };

  PathWalk walk_stored(PathId id, std::size_t* probes) const;

  PairSet pairs_;
  std::vector<HomeRecord> home_;
  std::vector<PairRecord> records_;
  std::unordered_map<std::uint64_t, PathId> index_;
  std::unordered_map<EventKey, EventRecord, EventKeyHash> events_;
};

}  // namespace pathoracle
