#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pathoracle/graph.hpp"
#include "pathoracle/path_walk.hpp"

namespace pathoracle {

// Result of one approximate query. meet_level is 0 when a ball test produced
// the exact path, otherwise the level whose pair structure supplied the
// middle segment. probes counts table reads made before the walk is emitted.
struct OracleAnswer {
  PathWalk walk;
  Weight reported_length = 0;
  int meet_level = 0;
  std::size_t probes = 0;
  std::size_t ball_explored = 0;
  std::size_t ball_tests = 0;  // truncated searches run; ball_explored sums over them
  // (u^(j), v^(j)) for j = 1..meet_level; empty for exact answers.
  std::vector<std::pair<Vertex, Vertex>> ladder;
};

}  // namespace pathoracle
