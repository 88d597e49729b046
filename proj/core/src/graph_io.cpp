#include "pathoracle/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pathoracle/errors.hpp"

namespace pathoracle {

namespace {

// Returns false at end of input; skips blank and comment lines.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

WeightedGraph read_graph_tsv(std::istream& in, std::uint64_t key_seed, LoadStats* stats) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw FormatError("empty graph file");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0 || n > static_cast<long long>(kNoVertex) - 1) {
    bad_line(line_no, "expected header `n m`");
  }
  std::vector<RawEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_data_line(in, line, line_no)) {
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string wtext;
    if (!(fields >> u >> v >> wtext) || u < 0 || v < 0) bad_line(line_no, "expected `u v w`");
    Weight w = 0;
    auto [ptr, ec] = std::from_chars(wtext.data(), wtext.data() + wtext.size(), w);
    if (ec != std::errc() || ptr != wtext.data() + wtext.size()) bad_line(line_no, "bad weight '" + wtext + "'");
    if (u >= n || v >= n) bad_line(line_no, "vertex id out of range");
    if (!(w > 0)) bad_line(line_no, "weights must be positive");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError("header declares " + std::to_string(m) + " edges but file has " +
                      std::to_string(edges.size()));
  }
  return WeightedGraph::from_edges(static_cast<Vertex>(n), edges, key_seed, stats);
}

WeightedGraph read_graph_file(const std::filesystem::path& path, std::uint64_t key_seed, LoadStats* stats) {
  auto in = open_or_throw(path);
  return read_graph_tsv(in, key_seed, stats);
}

std::string format_weight(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

void write_graph_tsv(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (next_data_line(in, line, line_no)) {
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0 || u >= kNoVertex || v >= kNoVertex) {
      bad_line(line_no, "expected `u v`");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return pairs;
}

std::vector<std::pair<Vertex, Vertex>> read_pairs_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_pairs(in);
}

}  // namespace pathoracle
