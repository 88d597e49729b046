#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathoracle/dppro.hpp"
#include "pathoracle/graph.hpp"
#include "pathoracle/landmarks.hpp"
#include "pathoracle/oracle_answer.hpp"
#include "pathoracle/tz.hpp"

namespace pathoracle {

enum class SamplingMode { kUniform, kDegreeWeighted };

SamplingMode parse_sampling_mode(const std::string& name);
std::string to_string(SamplingMode mode);

/// clamp(n^(k/(2k+2)) / k, clamp_c * ln n, n).
double choose_rho(Vertex n, int k, double clamp_c = 3.0);

// Per-vertex selection probability: rho/n (uniform) or
// min(1, ceil(deg/lambda) * rho/n) with lambda = m/n (degree-weighted).
double selection_probability(const WeightedGraph& g, Vertex v, double rho, SamplingMode mode);

// Sum of selection probabilities, i.e. the expected landmark count.
double expected_landmark_count(const WeightedGraph& g, double rho, SamplingMode mode);

// Independent per-vertex draws; an empty draw is replaced by {0}.
std::vector<Vertex> draw_landmarks(const WeightedGraph& g, double rho, SamplingMode mode, std::uint64_t seed);

struct LandmarkSet {
  std::vector<Vertex> members;  // ascending
  std::vector<char> is_member;
  NearestLandmarkForest forest;
  SamplingMode mode = SamplingMode::kUniform;
  double rho = 0;

  static LandmarkSet from_members(const WeightedGraph& g, std::vector<Vertex> members, SamplingMode mode, double rho);

  template <class Archive>
  void serialize(Archive& ar) {
    ar(members, is_member, forest, mode, rho);
  }
};

LandmarkSet sample_landmarks(const WeightedGraph& g, double rho, SamplingMode mode, std::uint64_t seed);

struct BasicConfig {
  int k = 2;
  std::uint64_t seed = 0;
  SamplingMode sampling = SamplingMode::kUniform;
  std::optional<double> rho;                     // default choose_rho(n, k)
  std::optional<std::vector<Vertex>> landmarks;  // bypasses sampling
  double clamp_c = 3.0;
  int tz_retries = 8;
  double tz_size_constant = 4.0;
};

struct BasicSpace {
  std::size_t forest_words = 0;
  std::size_t tz_words = 0;
  std::size_t dppro_words = 0;
  std::size_t landmark_count = 0;
  std::size_t spanner_pairs = 0;
  // Whether k^2 |L|^(2+2/k) <= n held for the drawn landmark set.
  bool linear_regime = false;

  std::size_t total_words() const { return forest_words + tz_words + dppro_words; }
};

/// Single-level landmark oracle with stretch 6k-1. Non-ball queries climb to
/// the nearest landmarks, route between them along the TZ path on the
/// landmark metric closure, and expand every TZ hop through a DPPRO over the
/// union spanner H. With k = 1 the TZ layer is skipped and the DPPRO holds
/// every landmark pair.
class BasicOracle {
 public:
  BasicOracle() = default;

  static BasicOracle build(std::shared_ptr<const WeightedGraph> g, const BasicConfig& config);

  OracleAnswer query(Vertex u, Vertex v) const;

  int k() const { return k_; }
  double stretch_bound() const { return 6.0 * k_ - 1.0; }
  const WeightedGraph& graph() const { return *graph_; }
  const LandmarkSet& landmarks() const { return landmarks_; }
  const Dppro& dppro() const { return dppro_; }
  const TzOracle& tz() const { return tz_; }
  // Spanner pairs in graph vertex ids.
  const PairSet& spanner_pairs() const { return dppro_.pairs(); }
  BasicSpace space_report() const;

  template <class Archive>
  void save(Archive& ar) const {
    ar(*graph_, k_, landmarks_, tz_, dppro_);
  }
  template <class Archive>
  void load(Archive& ar) {
    auto g = std::make_shared<WeightedGraph>();
    ar(*g, k_, landmarks_, tz_, dppro_);
    graph_ = std::move(g);
  }

 private:
  std::shared_ptr<const WeightedGraph> graph_;
  int k_ = 1;
  LandmarkSet landmarks_;
  TzOracle tz_;  // over landmark indices; unused when k == 1
  Dppro dppro_;
};

}  // namespace pathoracle
