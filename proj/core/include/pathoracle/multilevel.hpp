#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathoracle/dppro.hpp"
#include "pathoracle/graph.hpp"
#include "pathoracle/landmarks.hpp"
#include "pathoracle/oracle_answer.hpp"

namespace pathoracle {

enum class MultiLevelVariant { kStandard, kTilde };

std::string to_string(MultiLevelVariant variant);

struct LevelParameter {
  double alpha = 0;
  double rho = 0;
  template <class Archive>
  void serialize(Archive& ar) {
    ar(alpha, rho);
  }
};

// alpha_i = 1 - (3/4)^(h-i+1) and rho_i = clamp(n^alpha_i, clamp_c * ln n, n),
// returned for i = 1..h at index i-1.
std::vector<LevelParameter> level_exponents(Vertex n, int h, double clamp_c = 3.0);

// ceil(log_{4/3}(log_base(n) + 1)), the level count of the graph-free variant.
int tilde_levels(Vertex n, double log_base = 2.0);

// Stretch bound when the query meets at level p (p = 0 is an exact answer).
double level_stretch_bound(int p);

struct HierarchyConfig {
  int h = 2;
  MultiLevelVariant variant = MultiLevelVariant::kStandard;
  std::uint64_t seed = 0;
  bool disjoint_levels = false;
  double clamp_c = 3.0;
};

/// Landmark sets L_1..L_h, drawn independently per level unless
/// disjoint_levels is set, with the forest of nearest i-landmarks over all
/// vertices for every level. Level i is stored at index i-1.
struct LandmarkHierarchy {
  int h = 0;
  MultiLevelVariant variant = MultiLevelVariant::kStandard;
  std::vector<LevelParameter> params;
  std::vector<std::vector<Vertex>> members;  // ascending
  std::vector<std::vector<char>> is_member;
  std::vector<NearestLandmarkForest> forests;

  Vertex nearest(int level, Vertex v) const { return forests[static_cast<std::size_t>(level - 1)].root(v); }
  Weight radius(int level, Vertex v) const { return forests[static_cast<std::size_t>(level - 1)].dist(v); }
  bool contains(int level, Vertex v) const { return is_member[static_cast<std::size_t>(level - 1)][v] != 0; }

  template <class Archive>
  void serialize(Archive& ar) {
    ar(h, variant, params, members, is_member, forests);
  }
};

LandmarkHierarchy build_hierarchy(const WeightedGraph& g, const HierarchyConfig& config);

struct LevelStats {
  int level = 0;
  std::size_t landmarks = 0;
  double rho = 0;
  std::size_t pairs = 0;
  std::size_t branch_events = 0;
  double branch_reference = 0;  // rho_i^4 / rho_{i+1}^3 (0 at the top level)
  double pair_reference = 0;    // rho_i^2 / rho_{i+1} (0 at the top level)
  std::size_t dppro_words = 0;
};

struct MultiLevelSpace {
  std::size_t forest_words = 0;
  std::size_t dppro_words = 0;

  std::size_t total_words() const { return forest_words + dppro_words; }
};

struct MultiLevelConfig {
  int h = 2;
  MultiLevelVariant variant = MultiLevelVariant::kStandard;
  std::uint64_t seed = 0;
  bool disjoint_levels = false;
  double clamp_c = 3.0;
};

/// Hierarchical landmark oracle. For i < h the DPPRO D_i stores the canonical
/// paths between i-landmarks that lie in each other's one-third ball of level
/// i+1; the top DPPRO stores every pair of h-landmarks. A query climbs both
/// endpoints up the landmark ladder until their current landmarks form a
/// stored pair, so the answer meeting at level p has stretch 6*7^(p-1) - 1.
/// The tilde variant takes L_1 = V and keeps no reference to the graph.
class MultiLevelOracle {
 public:
  MultiLevelOracle() = default;

  static MultiLevelOracle build(std::shared_ptr<const WeightedGraph> g, const MultiLevelConfig& config);

  OracleAnswer query(Vertex u, Vertex v) const;

  int h() const { return hierarchy_.h; }
  MultiLevelVariant variant() const { return hierarchy_.variant; }
  Vertex num_vertices() const { return n_; }
  bool retains_graph() const { return graph_ != nullptr; }
  const LandmarkHierarchy& hierarchy() const { return hierarchy_; }
  // D_i for 1 <= i < h, the all-pairs top structure for i = h.
  const Dppro& level_dppro(int level) const { return levels_[static_cast<std::size_t>(level - 1)]; }
  double stretch_bound() const { return level_stretch_bound(hierarchy_.h); }
  std::vector<LevelStats> level_stats() const;
  MultiLevelSpace space_report() const;

  // Branching events at level i violating ball confinement; checked from all
  // four endpoint orientations of each event's pair of pairs.
  std::size_t audit_branch_confinement(int level) const;

  void drop_graph() { graph_.reset(); }

  template <class Archive>
  void save(Archive& ar) const {
    const bool has_graph = graph_ != nullptr;
    ar(n_, hierarchy_, levels_, balls_, has_graph);
    if (has_graph) ar(*graph_);
  }
  template <class Archive>
  void load(Archive& ar) {
    bool has_graph = false;
    ar(n_, hierarchy_, levels_, balls_, has_graph);
    graph_.reset();
    if (has_graph) {
      auto g = std::make_shared<WeightedGraph>();
      ar(*g);
      graph_ = std::move(g);
    }
  }

 private:
  // Ball_{i+1}(u) ∩ L_i for one i-landmark u, sorted by vertex id.
  struct BallMembers {
    std::vector<std::pair<Vertex, Weight>> members;

    const std::pair<Vertex, Weight>* find(Vertex x) const;

    template <class Archive>
    void serialize(Archive& ar) {
      ar(members);
    }
  };

  Vertex n_ = 0;
  std::shared_ptr<const WeightedGraph> graph_;
  LandmarkHierarchy hierarchy_;
  std::vector<Dppro> levels_;
  // balls_[i-1] maps each i-landmark to its level-(i+1) ball members, i < h.
  std::vector<std::unordered_map<Vertex, BallMembers>> balls_;
};

struct TildeConfig {
  std::uint64_t seed = 0;
  double log_base = 2.0;
  double space_constant = 16.0;  // restart while words > space_constant * n * h
  int max_attempts = 10;
  double clamp_c = 3.0;
};

struct TildeBuildInfo {
  int h = 0;
  int attempts = 0;
  std::size_t words = 0;
  std::size_t word_budget = 0;
};

/// Graph-free variant with h = tilde_levels(n). The graph reference is
/// released before returning.
MultiLevelOracle build_lambda_tilde(std::shared_ptr<const WeightedGraph> g, const TildeConfig& config,
                                    TildeBuildInfo* info = nullptr);

}  // namespace pathoracle
