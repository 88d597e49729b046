#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "pathoracle/graph.hpp"
#include "pathoracle/multilevel.hpp"
#include "pathoracle/oracle_answer.hpp"

namespace pathoracle {

struct SpannerGraph {
  std::shared_ptr<const WeightedGraph> host;
  std::shared_ptr<const WeightedGraph> graph;  // same vertices, kept edges, host tie keys
  std::vector<EdgeId> kept;                    // host edge ids, ascending
  int r = 0;                                   // 0 for externally supplied spanners
  double stretch = 1;                          // 2r-1, or the measured value for external input

  // n^(1+1/r) + n, the unweighted girth bound; 0 when r == 0.
  double size_reference() const;
};

/// Greedy (2r-1)-spanner: host edges in nondecreasing (weight, key, id)
/// order, each kept iff the current spanner distance between its endpoints
/// exceeds (2r-1) times its weight.
SpannerGraph greedy_spanner(std::shared_ptr<const WeightedGraph> host, int r);

// Max over host edges (u,v,w) of d_spanner(u,v) / w, which is the spanner's stretch.
double measure_spanner_stretch(const WeightedGraph& host, const WeightedGraph& spanner);

/// Spanner from an edge list; every edge must be a host edge with the same
/// weight (FormatError otherwise) and the result must span the host.
SpannerGraph spanner_from_edges(std::shared_ptr<const WeightedGraph> host, const std::vector<RawEdge>& edges);
SpannerGraph read_spanner(std::shared_ptr<const WeightedGraph> host, std::istream& in);
SpannerGraph read_spanner_file(std::shared_ptr<const WeightedGraph> host, const std::string& path);

struct ComposedConfig {
  int r = 2;
  int h = 2;
  std::uint64_t seed = 0;
  MultiLevelVariant variant = MultiLevelVariant::kStandard;
};

/// Multilevel oracle built on a spanner of the host; answers are spanner
/// walks and therefore host walks, with stretch at most s * (6*7^(p-1) - 1).
class ComposedOracle {
 public:
  ComposedOracle() = default;

  static ComposedOracle build(std::shared_ptr<const WeightedGraph> host, const ComposedConfig& config);
  static ComposedOracle build(const SpannerGraph& spanner, const ComposedConfig& config);

  // Throws std::logic_error if the inner answer is not a valid host walk.
  OracleAnswer query(Vertex u, Vertex v) const;

  double spanner_stretch() const { return stretch_; }
  double stretch_bound() const { return stretch_ * inner_.stretch_bound(); }
  // Bound for an answer that met at level p of the inner oracle.
  double answer_bound(int p) const { return stretch_ * level_stretch_bound(p); }
  std::size_t spanner_edges() const { return spanner_edges_; }
  const MultiLevelOracle& inner() const { return inner_; }
  const WeightedGraph& host() const { return *host_; }

  template <class Archive>
  void save(Archive& ar) const {
    ar(*host_, stretch_, spanner_edges_, inner_);
  }
  template <class Archive>
  void load(Archive& ar) {
    auto g = std::make_shared<WeightedGraph>();
    ar(*g, stretch_, spanner_edges_, inner_);
    host_ = std::move(g);
  }

 private:
  std::shared_ptr<const WeightedGraph> host_;
  double stretch_ = 1;
  std::size_t spanner_edges_ = 0;
  MultiLevelOracle inner_;
};

}  // namespace pathoracle
