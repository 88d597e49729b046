#include "pathoracle/basic_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "pathoracle/errors.hpp"
#include "pathoracle/hashing.hpp"
#include "pathoracle/shortest_paths.hpp"

namespace pathoracle {

SamplingMode parse_sampling_mode(const std::string& name) {
  if (name == "uniform") return SamplingMode::kUniform;
  if (name == "degree" || name == "degree_weighted") return SamplingMode::kDegreeWeighted;
  throw ParameterError("unknown sampling mode '" + name + "'");
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::kUniform ? "uniform" : "degree_weighted";
}

double choose_rho(Vertex n, int k, double clamp_c) {
  if (k < 1) throw ParameterError("k must be >= 1");
  const double nn = n;
  const double raw = std::pow(nn, static_cast<double>(k) / (2.0 * k + 2.0)) / k;
  const double lo = clamp_c * std::log(nn);
  return std::min(std::max(raw, lo), nn);
}

double selection_probability(const WeightedGraph& g, Vertex v, double rho, SamplingMode mode) {
  const double base = rho / g.num_vertices();
  if (mode == SamplingMode::kUniform) return std::min(1.0, base);
  const double lambda = density_lambda(g);
  const double copies = lambda > 0 ? std::ceil(static_cast<double>(g.degree(v)) / lambda) : 1.0;
  return std::min(1.0, copies * base);
}

double expected_landmark_count(const WeightedGraph& g, double rho, SamplingMode mode) {
  double total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) total += selection_probability(g, v, rho, mode);
  return total;
}

std::vector<Vertex> draw_landmarks(const WeightedGraph& g, double rho, SamplingMode mode, std::uint64_t seed) {
  const Vertex n = g.num_vertices();
  if (n == 0) throw ParameterError("cannot sample landmarks of an empty graph");
  if (!(rho > 0) || rho > n) throw ParameterError("rho must lie in (0, n]");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (unit_interval(mix64(seed, v)) < selection_probability(g, v, rho, mode)) out.push_back(v);
  }
  if (out.empty()) out.push_back(0);
  return out;
}

LandmarkSet LandmarkSet::from_members(const WeightedGraph& g, std::vector<Vertex> members, SamplingMode mode,
                                      double rho) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw ParameterError("landmark set must be nonempty");
  LandmarkSet s;
  s.is_member.assign(g.num_vertices(), 0);
  for (Vertex v : members) {
    if (v >= g.num_vertices()) throw ParameterError("landmark id out of range");
    s.is_member[v] = 1;
  }
  s.forest = NearestLandmarkForest::build(g, members);
  s.members = std::move(members);
  s.mode = mode;
  s.rho = rho;
  return s;
}

LandmarkSet sample_landmarks(const WeightedGraph& g, double rho, SamplingMode mode, std::uint64_t seed) {
  return LandmarkSet::from_members(g, draw_landmarks(g, rho, mode, seed), mode, rho);
}

BasicOracle BasicOracle::build(std::shared_ptr<const WeightedGraph> graph, const BasicConfig& config) {
  if (config.k < 1) throw ParameterError("k must be >= 1");
  const WeightedGraph& g = *graph;
  if (g.num_vertices() == 0) throw ParameterError("graph is empty");
  if (!g.is_connected()) throw DisconnectedError("basic oracle needs a connected graph");

  BasicOracle o;
  o.graph_ = graph;
  o.k_ = config.k;
  const double rho = config.rho.value_or(choose_rho(g.num_vertices(), config.k, config.clamp_c));
  o.landmarks_ = config.landmarks
                     ? LandmarkSet::from_members(g, *config.landmarks, config.sampling, rho)
                     : sample_landmarks(g, rho, config.sampling, mix64(config.seed, 0x1a));
  const std::vector<Vertex>& L = o.landmarks_.members;

  CanonicalPathSystem system(g);
  system.add_sources(L);

  std::vector<VertexPair> pairs;
  if (config.k == 1) {
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = i + 1; j < L.size(); ++j) pairs.push_back({L[i], L[j]});
    }
  } else {
    std::vector<RawEdge> closure;
    closure.reserve(L.size() * (L.size() - 1) / 2);
    for (std::size_t i = 0; i < L.size(); ++i) {
      const ShortestPathTree& tree = system.tree(L[i]);
      for (std::size_t j = i + 1; j < L.size(); ++j) {
        closure.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), tree.dist(L[j])});
      }
    }
    const WeightedGraph host = WeightedGraph::from_edges(static_cast<Vertex>(L.size()), closure, mix64(config.seed, 0x2b));
    TzConfig tz;
    tz.k = config.k;
    tz.seed = mix64(config.seed, 0x3c);
    tz.size_cap_retries = config.tz_retries;
    tz.size_cap_constant = config.tz_size_constant;
    o.tz_ = TzOracle::build(host, tz);
    for (const VertexPair& p : extract_union_spanner(o.tz_).pairs) pairs.push_back({L[p.a], L[p.b]});
  }
  o.dppro_ = Dppro::build(g, PairSet(std::move(pairs)), system);
  return o;
}

OracleAnswer BasicOracle::query(Vertex u, Vertex v) const {
  const WeightedGraph& g = *graph_;
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw ParameterError("query vertex out of range");
  OracleAnswer ans;
  if (u == v) {
    ans.walk = PathWalk(u);
    return ans;
  }
  const auto is_landmark = [this](Vertex x) { return landmarks_.is_member[x] != 0; };
  const NearestLandmarkForest& forest = landmarks_.forest;

  BallResult from_u = truncated_ball_search(g, u, is_landmark, v, forest.dist(u));
  ans.ball_explored += from_u.explored.size();
  ++ans.ball_tests;
  if (from_u.outcome == BallOutcome::kFoundTarget) {
    ans.walk = std::move(from_u.path);
    ans.reported_length = ans.walk.length();
    return ans;
  }
  BallResult from_v = truncated_ball_search(g, v, is_landmark, u, forest.dist(v));
  ans.ball_explored += from_v.explored.size();
  ++ans.ball_tests;
  if (from_v.outcome == BallOutcome::kFoundTarget) {
    ans.walk = from_v.path.reversed();
    ans.reported_length = ans.walk.length();
    return ans;
  }

  const Vertex lu = forest.root(u);
  const Vertex lv = forest.root(v);
  ans.probes += 2;
  ans.meet_level = 1;
  ans.ladder.emplace_back(lu, lv);
  PathWalk walk = forest.path_to_root(u);
  if (lu != lv) {
    std::vector<Vertex> route;
    if (k_ == 1) {
      route = {lu, lv};
    } else {
      const std::vector<Vertex>& L = landmarks_.members;
      const auto index_of = [&L](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(L.begin(), L.end(), x) - L.begin());
      };
      const PathWalk hops = tz_.query(index_of(lu), index_of(lv), &ans.probes);
      for (Vertex z : hops.vertices()) route.push_back(L[z]);
    }
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      std::size_t segment_probes = 0;
      walk.append(dppro_.query(route[i], route[i + 1], &segment_probes));
      ++ans.probes;
    }
  }
  walk.append_reversed(forest.path_to_root(v));
  ans.walk = std::move(walk);
  ans.reported_length = ans.walk.length();
  return ans;
}

BasicSpace BasicOracle::space_report() const {
  BasicSpace s;
  const std::size_t n = graph_->num_vertices();
  s.forest_words = 4 * n;
  s.tz_words = k_ == 1 ? 0 : tz_.word_count();
  s.dppro_words = dppro_.space_report().total_words();
  s.landmark_count = landmarks_.members.size();
  s.spanner_pairs = dppro_.pairs().size();
  const double l = static_cast<double>(s.landmark_count);
  s.linear_regime = static_cast<double>(k_) * k_ * std::pow(l, 2.0 + 2.0 / k_) <= static_cast<double>(n);
  return s;
}

}  // namespace pathoracle
