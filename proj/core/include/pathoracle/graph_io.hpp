#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pathoracle/graph.hpp"

namespace pathoracle {

// Graph TSV: first non-comment line `n m`, then m lines `u v w` (0-indexed,
// each undirected edge once). Blank lines and `#` comments are ignored.
WeightedGraph read_graph_tsv(std::istream& in, std::uint64_t key_seed = 0, LoadStats* stats = nullptr);
WeightedGraph read_graph_file(const std::filesystem::path& path, std::uint64_t key_seed = 0,
                              LoadStats* stats = nullptr);
void write_graph_tsv(std::ostream& out, const WeightedGraph& g);

// Pair list: one `u v` per line, same comment rules.
std::vector<std::pair<Vertex, Vertex>> read_pairs(std::istream& in);
std::vector<std::pair<Vertex, Vertex>> read_pairs_file(const std::filesystem::path& path);

// Shortest round-trip decimal for a weight ("3" for 3.0, "0.1" for 0.1).
std::string format_weight(Weight w);

}  // namespace pathoracle
