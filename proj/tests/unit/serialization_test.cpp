#include <gtest/gtest.h>

#include <memory>
#include <sstream>

#include "pathoracle/basic_oracle.hpp"
#include "pathoracle/errors.hpp"
#include "pathoracle/generators.hpp"
#include "pathoracle/multilevel.hpp"
#include "pathoracle/serialization.hpp"
#include "pathoracle/spanner.hpp"
#include "support/reference.hpp"

namespace pathoracle {
namespace {

std::shared_ptr<const WeightedGraph> shared(WeightedGraph g) { return std::make_shared<const WeightedGraph>(std::move(g)); }

template <class Oracle>
Oracle round_trip(const Oracle& o, OracleKind kind) {
  std::stringstream buf;
  save_oracle(buf, kind, o);
  EXPECT_EQ(read_oracle_header(buf), kind);
  return load_oracle_body<Oracle>(buf);
}

void expect_same(const OracleAnswer& a, const OracleAnswer& b) {
  EXPECT_EQ(a.walk, b.walk);
  EXPECT_EQ(a.reported_length, b.reported_length);
  EXPECT_EQ(a.meet_level, b.meet_level);
  EXPECT_EQ(a.probes, b.probes);
}

const WeightedGraph& host() {
  static const WeightedGraph g = generate_graph({GraphModel::kGnm, 300, 1200, {1, 50}, 12});
  return g;
}

TEST(Serialization, GraphRoundTripKeepsKeysAndAdjacency) {
  std::stringstream buf;
  {
    cereal::BinaryOutputArchive ar(buf);
    ar(host());
  }
  WeightedGraph back;
  {
    cereal::BinaryInputArchive ar(buf);
    ar(back);
  }
  ASSERT_EQ(back.num_edges(), host().num_edges());
  for (EdgeId id = 0; id < back.num_edges(); ++id) {
    EXPECT_EQ(back.edge(id).key, host().edge(id).key);
    EXPECT_EQ(back.edge(id).w, host().edge(id).w);
  }
  EXPECT_EQ(back.degree(7), host().degree(7));
}

TEST(Serialization, DpproRoundTrip) {
  CanonicalPathSystem sys(host());
  const PairSet pairs(testing::random_pairs(300, 40, 1));
  std::vector<Vertex> sources;
  for (const VertexPair& p : pairs.pairs()) sources.push_back(p.a);
  sys.add_sources(sources);
  const Dppro o = Dppro::build(host(), pairs, sys);
  const Dppro back = round_trip(o, OracleKind::kDppro);
  for (const VertexPair& p : pairs.pairs()) EXPECT_EQ(back.query(p.b, p.a), o.query(p.b, p.a));
}

TEST(Serialization, BasicRoundTrip) {
  BasicConfig cfg;
  cfg.k = 2;
  cfg.seed = 3;
  const BasicOracle o = BasicOracle::build(shared(host()), cfg);
  const BasicOracle back = round_trip(o, OracleKind::kBasic);
  for (auto [u, v] : testing::random_pairs(300, 300, 2)) expect_same(o.query(u, v), back.query(u, v));
}

TEST(Serialization, MultilevelAndTildeRoundTrip) {
  MultiLevelConfig cfg;
  cfg.h = 2;
  cfg.seed = 4;
  const MultiLevelOracle o = MultiLevelOracle::build(shared(host()), cfg);
  const MultiLevelOracle back = round_trip(o, OracleKind::kMultilevel);
  EXPECT_TRUE(back.retains_graph());
  EXPECT_EQ(back.audit_branch_confinement(1), 0u);
  for (auto [u, v] : testing::random_pairs(300, 300, 3)) expect_same(o.query(u, v), back.query(u, v));

  const MultiLevelOracle t = build_lambda_tilde(shared(host()), {5});
  const MultiLevelOracle tback = round_trip(t, OracleKind::kTilde);
  EXPECT_FALSE(tback.retains_graph());
  for (auto [u, v] : testing::random_pairs(300, 300, 4)) expect_same(t.query(u, v), tback.query(u, v));
}

TEST(Serialization, ComposedRoundTrip) {
  ComposedConfig cfg;
  cfg.r = 2;
  cfg.seed = 6;
  const ComposedOracle o = ComposedOracle::build(shared(host()), cfg);
  const ComposedOracle back = round_trip(o, OracleKind::kComposed);
  EXPECT_EQ(back.stretch_bound(), o.stretch_bound());
  for (auto [u, v] : testing::random_pairs(300, 300, 5)) expect_same(o.query(u, v), back.query(u, v));
}

TEST(Serialization, RejectsBadHeadersAndTruncation) {
  std::istringstream junk("NOTANORACLEFILE");
  EXPECT_THROW(read_oracle_header(junk), FormatError);

  std::stringstream buf;
  BasicConfig cfg;
  cfg.k = 1;
  save_oracle(buf, OracleKind::kBasic, BasicOracle::build(shared(host()), cfg));
  std::string bytes = buf.str();
  std::string bad_version = bytes;
  bad_version[8] = 9;
  std::istringstream v(bad_version);
  EXPECT_THROW(read_oracle_header(v), FormatError);
  std::string bad_kind = bytes;
  bad_kind[12] = 42;
  std::istringstream kind(bad_kind);
  EXPECT_THROW(read_oracle_header(kind), FormatError);

  std::istringstream cut(bytes.substr(0, bytes.size() / 2));
  read_oracle_header(cut);
  EXPECT_THROW(load_oracle_body<BasicOracle>(cut), FormatError);
}

}  // namespace
}  // namespace pathoracle
