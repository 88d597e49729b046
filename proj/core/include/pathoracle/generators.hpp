#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "pathoracle/graph.hpp"

namespace pathoracle {

enum class GraphModel { kGnm, kGrid, kPath, kCycle };

GraphModel parse_graph_model(std::string_view name);
std::string_view to_string(GraphModel model);

// Integer weights drawn uniformly from [lo, hi]; lo == hi == 1 is the unit-weight case.
struct WeightRange {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
};

struct GeneratorSpec {
  GraphModel model = GraphModel::kGnm;
  Vertex n = 0;
  std::size_t m = 0;  // gnm only
  WeightRange weights;
  std::uint64_t seed = 0;
};

/// Connected graph from one of the built-in models. gnm plants a uniform random
/// spanning tree (Prufer decoding) and then adds distinct random edges until
/// exactly m edges exist; grid lays vertices out row-major in rows of
/// ceil(sqrt(n)). Output is a pure function of the GeneratorSpec.
WeightedGraph generate_graph(const GeneratorSpec& spec);

}  // namespace pathoracle
