#include "pathoracle/multilevel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pathoracle/errors.hpp"
#include "pathoracle/hashing.hpp"
#include "pathoracle/parallel.hpp"
#include "pathoracle/shortest_paths.hpp"

namespace pathoracle {

std::string to_string(MultiLevelVariant variant) {
  return variant == MultiLevelVariant::kStandard ? "standard" : "tilde";
}

std::vector<LevelParameter> level_exponents(Vertex n, int h, double clamp_c) {
  if (h < 1) throw ParameterError("h must be >= 1");
  if (n < 2) throw ParameterError("level exponents need n >= 2");
  const double nn = n;
  const double lo = std::min(clamp_c * std::log(nn), nn);
  std::vector<LevelParameter> out(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) {
    LevelParameter& p = out[static_cast<std::size_t>(i - 1)];
    p.alpha = 1.0 - std::pow(0.75, h - i + 1);
    p.rho = std::clamp(std::pow(nn, p.alpha), lo, nn);
  }
  return out;
}

int tilde_levels(Vertex n, double log_base) {
  if (n < 2) throw ParameterError("tilde levels need n >= 2");
  const double inner = std::log(static_cast<double>(n)) / std::log(log_base) + 1.0;
  return static_cast<int>(std::ceil(std::log(inner) / std::log(4.0 / 3.0) - 1e-12));
}

double level_stretch_bound(int p) {
  if (p <= 0) return 1.0;
  return 6.0 * std::pow(7.0, p - 1) - 1.0;
}

LandmarkHierarchy build_hierarchy(const WeightedGraph& g, const HierarchyConfig& config) {
  const Vertex n = g.num_vertices();
  if (config.variant == MultiLevelVariant::kTilde && config.disjoint_levels) {
    throw ParameterError("disjoint levels cannot be combined with the tilde variant (L_1 = V)");
  }
  if (!g.is_connected()) throw DisconnectedError("multilevel oracle needs a connected graph");
  LandmarkHierarchy hy;
  hy.h = config.h;
  hy.variant = config.variant;
  hy.params = level_exponents(n, config.h, config.clamp_c);
  const auto levels = static_cast<std::size_t>(config.h);
  hy.members.resize(levels);
  hy.is_member.assign(levels, std::vector<char>(n, 0));
  hy.forests.resize(levels);
  std::vector<char> taken(n, 0);
  for (std::size_t idx = levels; idx-- > 0;) {
    std::vector<Vertex>& members = hy.members[idx];
    if (idx == 0 && config.variant == MultiLevelVariant::kTilde) {
      members.resize(n);
      for (Vertex v = 0; v < n; ++v) members[v] = v;
    } else {
      const double p = hy.params[idx].rho / n;
      const std::uint64_t level_seed = mix64(config.seed, idx + 1);
      for (Vertex v = 0; v < n; ++v) {
        if (config.disjoint_levels && taken[v]) continue;
        if (unit_interval(mix64(level_seed, v)) < p) members.push_back(v);
      }
      if (members.empty()) {
        Vertex forced = 0;
        if (config.disjoint_levels) {
          while (forced < n && taken[forced]) ++forced;
          if (forced == n) forced = 0;
        }
        members.push_back(forced);
      }
    }
    for (Vertex v : members) {
      hy.is_member[idx][v] = 1;
      taken[v] = 1;
    }
    hy.forests[idx] = NearestLandmarkForest::build(g, members);
  }
  return hy;
}

namespace {

struct FoundPath {
  VertexPair pair;
  PathWalk path;  // pair.a -> pair.b
};

// Orients a search-tree path source -> x into the stored a -> b direction.
FoundPath make_found(Vertex source, Vertex x, PathWalk&& path) {
  if (source < x) return {{source, x}, std::move(path)};
  return {{x, source}, path.reversed()};
}

Dppro assemble(Vertex n, std::vector<std::vector<FoundPath>>& per_source) {
  std::vector<FoundPath> all;
  for (auto& chunk : per_source) {
    for (FoundPath& f : chunk) all.push_back(std::move(f));
    chunk.clear();
  }
  std::sort(all.begin(), all.end(), [](const FoundPath& x, const FoundPath& y) { return x.pair < y.pair; });
  all.erase(std::unique(all.begin(), all.end(), [](const FoundPath& x, const FoundPath& y) { return x.pair == y.pair; }),
            all.end());
  std::vector<VertexPair> pairs;
  std::vector<PathWalk> paths;
  pairs.reserve(all.size());
  paths.reserve(all.size());
  for (FoundPath& f : all) {
    pairs.push_back(f.pair);
    paths.push_back(std::move(f.path));
  }
  return Dppro::from_paths(n, PairSet(std::move(pairs)), paths);
}

}  // namespace

const std::pair<Vertex, Weight>* MultiLevelOracle::BallMembers::find(Vertex x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x,
                             [](const std::pair<Vertex, Weight>& m, Vertex key) { return m.first < key; });
  return it != members.end() && it->first == x ? &*it : nullptr;
}

MultiLevelOracle MultiLevelOracle::build(std::shared_ptr<const WeightedGraph> graph, const MultiLevelConfig& config) {
  const WeightedGraph& g = *graph;
  HierarchyConfig hc;
  hc.h = config.h;
  hc.variant = config.variant;
  hc.seed = config.seed;
  hc.disjoint_levels = config.disjoint_levels;
  hc.clamp_c = config.clamp_c;

  MultiLevelOracle o;
  o.n_ = g.num_vertices();
  o.hierarchy_ = build_hierarchy(g, hc);
  const int h = config.h;
  o.levels_.resize(static_cast<std::size_t>(h));
  o.balls_.resize(static_cast<std::size_t>(h - 1));

  for (int i = 1; i < h; ++i) {
    const std::vector<Vertex>& landmarks = o.hierarchy_.members[static_cast<std::size_t>(i - 1)];
    std::vector<std::vector<FoundPath>> found(landmarks.size());
    std::vector<BallMembers> balls(landmarks.size());
    parallel_for(landmarks.size(), [&](std::size_t idx) {
      const Vertex u = landmarks[idx];
      const Weight r = o.hierarchy_.radius(i + 1, u);
      SearchWorkspace& ws = thread_workspace(g.num_vertices());
      ws.reset(g.num_vertices());
      std::vector<Vertex> settled;
      detail::canonical_search(g, u, ws, {r, false}, [](Vertex) -> std::uint8_t { return 0; },
                               [&](Vertex x) {
                                 if (o.hierarchy_.contains(i, x)) settled.push_back(x);
                                 return true;
                               });
      for (Vertex x : settled) {
        const Weight d = ws.label(x).dist;
        balls[idx].members.emplace_back(x, d);
        if (x != u && d < r / 3) found[idx].push_back(make_found(u, x, detail::path_from_workspace(g, ws, x)));
      }
      std::sort(balls[idx].members.begin(), balls[idx].members.end());
    });
    auto& ball_map = o.balls_[static_cast<std::size_t>(i - 1)];
    ball_map.reserve(landmarks.size());
    for (std::size_t idx = 0; idx < landmarks.size(); ++idx) ball_map.emplace(landmarks[idx], std::move(balls[idx]));
    o.levels_[static_cast<std::size_t>(i - 1)] = assemble(g.num_vertices(), found);
  }

  const std::vector<Vertex>& top = o.hierarchy_.members[static_cast<std::size_t>(h - 1)];
  std::vector<std::vector<FoundPath>> found(top.size());
  parallel_for(top.size(), [&](std::size_t idx) {
    const Vertex u = top[idx];
    SearchWorkspace& ws = thread_workspace(g.num_vertices());
    ws.reset(g.num_vertices());
    detail::canonical_search(g, u, ws, {}, [](Vertex) -> std::uint8_t { return 0; }, [](Vertex) { return true; });
    for (std::size_t j = idx + 1; j < top.size(); ++j) {
      if (!ws.reached(top[j])) throw DisconnectedError("top-level landmarks are not connected");
      found[idx].push_back({{u, top[j]}, detail::path_from_workspace(g, ws, top[j])});
    }
  });
  o.levels_[static_cast<std::size_t>(h - 1)] = assemble(g.num_vertices(), found);

  if (config.variant == MultiLevelVariant::kStandard) o.graph_ = std::move(graph);
  return o;
}

OracleAnswer MultiLevelOracle::query(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw ParameterError("query vertex out of range");
  OracleAnswer ans;
  if (u == v) {
    ans.walk = PathWalk(u);
    return ans;
  }
  const LandmarkHierarchy& hy = hierarchy_;
  if (hy.variant == MultiLevelVariant::kStandard) {
    const WeightedGraph& g = *graph_;
    const auto is_landmark = [&hy](Vertex x) { return hy.contains(1, x); };
    BallResult from_u = truncated_ball_search(g, u, is_landmark, v, hy.radius(1, u));
    ans.ball_explored += from_u.explored.size();
    ++ans.ball_tests;
    if (from_u.outcome == BallOutcome::kFoundTarget) {
      ans.walk = std::move(from_u.path);
      ans.reported_length = ans.walk.length();
      return ans;
    }
    BallResult from_v = truncated_ball_search(g, v, is_landmark, u, hy.radius(1, v));
    ans.ball_explored += from_v.explored.size();
    ++ans.ball_tests;
    if (from_v.outcome == BallOutcome::kFoundTarget) {
      ans.walk = from_v.path.reversed();
      ans.reported_length = ans.walk.length();
      return ans;
    }
  }

  // Ladder: u^(0) = u, u^(j) = nearest j-landmark of u^(j-1).
  Vertex uj = hy.nearest(1, u);
  Vertex vj = hy.nearest(1, v);
  ans.probes += 2;
  std::vector<Vertex> ladder_u{u, uj};
  std::vector<Vertex> ladder_v{v, vj};
  int j = 1;
  const Dppro* middle = nullptr;
  for (;; ++j) {
    ans.ladder.emplace_back(uj, vj);
    if (uj == vj) break;
    if (j == hy.h) {
      middle = &levels_[static_cast<std::size_t>(j - 1)];
      ++ans.probes;
      break;
    }
    ++ans.probes;
    if (levels_[static_cast<std::size_t>(j - 1)].contains(uj, vj)) {
      middle = &levels_[static_cast<std::size_t>(j - 1)];
      ++ans.probes;
      break;
    }
    uj = hy.nearest(j + 1, uj);
    vj = hy.nearest(j + 1, vj);
    ans.probes += 2;
    ladder_u.push_back(uj);
    ladder_v.push_back(vj);
  }
  ans.meet_level = j;

  // Emission: ladder up from u, middle segment, ladder down to v.
  PathWalk walk(u);
  for (std::size_t s = 0; s + 1 < ladder_u.size(); ++s) {
    walk.append(hy.forests[s].path_to_root(ladder_u[s]));
  }
  if (middle != nullptr) walk.append(middle->query(uj, vj));
  for (std::size_t s = ladder_v.size() - 1; s-- > 0;) {
    walk.append_reversed(hy.forests[s].path_to_root(ladder_v[s]));
  }
  ans.walk = std::move(walk);
  ans.reported_length = ans.walk.length();
  return ans;
}

std::vector<LevelStats> MultiLevelOracle::level_stats() const {
  std::vector<LevelStats> out;
  for (int i = 1; i <= hierarchy_.h; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    LevelStats s;
    s.level = i;
    s.landmarks = hierarchy_.members[idx].size();
    s.rho = hierarchy_.params[idx].rho;
    s.pairs = levels_[idx].pairs().size();
    s.branch_events = levels_[idx].event_count();
    if (i < hierarchy_.h) {
      const double a = s.rho;
      const double b = hierarchy_.params[idx + 1].rho;
      s.branch_reference = std::pow(a, 4) / std::pow(b, 3);
      s.pair_reference = a * a / b;
    }
    s.dppro_words = levels_[idx].space_report().total_words();
    out.push_back(s);
  }
  return out;
}

MultiLevelSpace MultiLevelOracle::space_report() const {
  MultiLevelSpace s;
  // Per vertex and level: root, parent, distance, parent edge weight.
  s.forest_words = 4 * static_cast<std::size_t>(n_) * static_cast<std::size_t>(hierarchy_.h);
  for (const Dppro& d : levels_) s.dppro_words += d.space_report().total_words();
  return s;
}

std::size_t MultiLevelOracle::audit_branch_confinement(int level) const {
  if (level < 1 || level >= hierarchy_.h) return 0;
  const auto idx = static_cast<std::size_t>(level - 1);
  const Dppro& d = levels_[idx];
  const auto& balls = balls_[idx];
  const auto& pairs = d.pairs().pairs();

  // True when `center`'s one-third ball holds `other` but misses an endpoint of `q`.
  auto violates = [&](Vertex center, Vertex other, const VertexPair& q) {
    const BallMembers& ball = balls.at(center);
    const auto* hit = ball.find(other);
    if (hit == nullptr || !(hit->second < hierarchy_.radius(level + 1, center) / 3)) return false;
    return ball.find(q.a) == nullptr || ball.find(q.b) == nullptr;
  };

  std::size_t violations = 0;
  for (const Dppro::Event& e : d.events()) {
    const VertexPair p = pairs[e.lower_path];
    const VertexPair q = pairs[e.upper_path];
    if (violates(p.a, p.b, q) || violates(p.b, p.a, q) || violates(q.a, q.b, p) || violates(q.b, q.a, p)) {
      ++violations;
    }
  }
  return violations;
}

MultiLevelOracle build_lambda_tilde(std::shared_ptr<const WeightedGraph> g, const TildeConfig& config,
                                    TildeBuildInfo* info) {
  const Vertex n = g->num_vertices();
  const int h = tilde_levels(n, config.log_base);
  const auto budget = static_cast<std::size_t>(config.space_constant * n * h);
  MultiLevelOracle best;
  std::size_t best_words = std::numeric_limits<std::size_t>::max();
  int attempts = 0;
  for (int attempt = 0; attempt < std::max(1, config.max_attempts); ++attempt) {
    ++attempts;
    MultiLevelConfig mc;
    mc.h = h;
    mc.variant = MultiLevelVariant::kTilde;
    mc.seed = mix64(config.seed, static_cast<std::uint64_t>(attempt));
    mc.clamp_c = config.clamp_c;
    MultiLevelOracle candidate = MultiLevelOracle::build(g, mc);
    const std::size_t words = candidate.space_report().total_words();
    if (words < best_words) {
      best = std::move(candidate);
      best_words = words;
    }
    if (best_words <= budget) break;
  }
  best.drop_graph();
  if (info != nullptr) *info = {h, attempts, best_words, budget};
  return best;
}

}  // namespace pathoracle
