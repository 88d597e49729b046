#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "pathoracle/dppro.hpp"
#include "pathoracle/errors.hpp"
#include "pathoracle/generators.hpp"
#include "support/reference.hpp"

namespace pathoracle {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Dppro build_for(const WeightedGraph& g, const PairSet& pairs) {
  CanonicalPathSystem sys(g);
  std::set<Vertex> sources;
  for (const VertexPair& p : pairs.pairs()) sources.insert(p.a);
  sys.add_sources({sources.begin(), sources.end()});
  return Dppro::build(g, pairs, sys);
}

std::vector<PathWalk> stored_paths(const Dppro& o) {
  std::vector<PathWalk> out;
  for (const VertexPair& p : o.pairs().pairs()) out.push_back(o.query(p.a, p.b));
  return out;
}

std::vector<testing::BruteEvent> as_brute(const Dppro& o) {
  std::vector<testing::BruteEvent> out;
  for (const Dppro::Event& e : o.events()) out.push_back({e.lower_path, e.upper_path, e.vertex});
  return out;
}

// a=0, b=1, c=2, d=3, e=4 with edges a-c, b-c, c-d, c-e.
WeightedGraph star() {
  return WeightedGraph::from_edges(5, std::vector<RawEdge>{{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}});
}

TEST(Dppro, StarHasOneEventAtTheCenter) {
  const Dppro o = build_for(star(), PairSet(Pairs{{0, 3}, {1, 4}}));
  const auto events = o.events();
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].vertex, 2u);
  const PathWalk w = o.query(1, 4);
  EXPECT_EQ(w.vertices(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(w.length(), 2);
  EXPECT_EQ(o.query(0, 3).vertices(), (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(o.space_report().event_count, 1u);
}

TEST(Dppro, SinglePairOnPath) {
  const WeightedGraph g = generate_graph({GraphModel::kPath, 4, 0, {}, 0});
  const Dppro o = build_for(g, PairSet(Pairs{{0, 3}}));
  EXPECT_EQ(o.event_count(), 0u);
  const DpproSpace s = o.space_report();
  EXPECT_EQ(s.pair_count, 1u);
  EXPECT_EQ(s.home_entries, 2u);
  const PathWalk w = o.query(0, 3);
  EXPECT_EQ(w.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(o.query(3, 0), w.reversed());
}

TEST(Dppro, OverlappingPathsBranchOnlyWhereIncidentEdgesDiffer) {
  const WeightedGraph g = generate_graph({GraphModel::kPath, 5, 0, {}, 0});
  const Dppro o = build_for(g, PairSet(Pairs{{0, 3}, {1, 4}}));
  const auto paths = stored_paths(o);
  EXPECT_EQ(paths[0].vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(paths[1].vertices(), (std::vector<Vertex>{1, 2, 3, 4}));
  const auto expected = testing::brute_force_events(paths);
  EXPECT_EQ(as_brute(o), expected);
  ASSERT_EQ(expected.size(), 2u);
  EXPECT_EQ(expected[0].vertex, 1u);
  EXPECT_EQ(expected[1].vertex, 3u);
}

TEST(Dppro, TraversalInOppositeDirectionsIsNotAnEvent) {
  // Path laid out as 0-3-2-1-4: stored 0->4 runs 3,2,1 while stored 1->3 runs 1,2,3.
  const WeightedGraph g =
      WeightedGraph::from_edges(5, std::vector<RawEdge>{{0, 3, 1}, {3, 2, 1}, {2, 1, 1}, {1, 4, 1}});
  const Dppro o = build_for(g, PairSet(Pairs{{0, 4}, {1, 3}}));
  for (const Dppro::Event& e : o.events()) EXPECT_NE(e.vertex, 2u);
  EXPECT_EQ(o.events().size(), 2u);
  EXPECT_EQ(o.query(1, 3).vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(o.query(0, 4).vertices(), (std::vector<Vertex>{0, 3, 2, 1, 4}));
}

TEST(Dppro, SingleEdgePairsNeedNoHomeEntries) {
  const WeightedGraph g = generate_graph({GraphModel::kPath, 4, 0, {}, 0});
  const Dppro o = build_for(g, PairSet(Pairs{{0, 1}, {2, 3}}));
  EXPECT_EQ(o.space_report().home_entries, 0u);
  EXPECT_EQ(o.query(1, 0).vertices(), (std::vector<Vertex>{1, 0}));
}

TEST(Dppro, UnknownPairIsDistinctFromNoPath) {
  const WeightedGraph g = generate_graph({GraphModel::kPath, 4, 0, {}, 0});
  const Dppro o = build_for(g, PairSet(Pairs{{0, 3}}));
  EXPECT_THROW(o.query(0, 2), NotInPairsError);
  EXPECT_THROW(PairSet(Pairs{{1, 1}}), ParameterError);
  const WeightedGraph split = WeightedGraph::from_edges(4, std::vector<RawEdge>{{0, 1, 1}, {2, 3, 1}});
  EXPECT_THROW(build_for(split, PairSet(Pairs{{0, 3}})), DisconnectedError);
}

class DpproRandom : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DpproRandom, ExactEventsProbesAndSymmetry) {
  const std::uint64_t seed = GetParam();
  const WeightedGraph g = generate_graph({GraphModel::kGnm, 128, 512, {1, 100}, seed});
  const PairSet pairs(testing::random_pairs(128, 32, seed));
  const Dppro o = build_for(g, pairs);
  std::vector<PathWalk> paths;
  for (const VertexPair& p : pairs.pairs()) {
    const auto d = testing::bellman_ford(g, p.a);
    std::size_t probes = 0;
    const PathWalk w = o.query(p.a, p.b, &probes);
    ASSERT_TRUE(is_valid_walk(g, w)) << walk_defect(g, w);
    EXPECT_EQ(w.length(), d[p.b]);
    EXPECT_LE(probes, 4 * (w.hop_count() + 1));
    EXPECT_EQ(o.query(p.b, p.a), w.reversed());
    paths.push_back(w);
  }
  EXPECT_EQ(as_brute(o), testing::brute_force_events(paths));
  EXPECT_LE(o.max_events_per_path_pair(), 2u);
}

INSTANTIATE_TEST_SUITE_P(Seeds, DpproRandom, ::testing::Values(7, 8, 9, 10, 11));

TEST(Dppro, AllPairsAmongTerminalsStayUnderTheEventCap) {
  const WeightedGraph g = generate_graph({GraphModel::kGnm, 64, 192, {1, 20}, 4});
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::vector<Vertex> terminals = {1, 9, 17, 25, 33, 41, 49, 57};
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) pairs.emplace_back(terminals[i], terminals[j]);
  }
  const Dppro o = build_for(g, PairSet(pairs));
  EXPECT_EQ(o.pairs().size(), 28u);
  EXPECT_LE(o.event_count(), 756u);
  EXPECT_LE(o.max_events_per_path_pair(), 2u);
}

TEST(Dppro, FromPathsRejectsMismatchedInput) {
  const PairSet pairs(Pairs{{0, 2}});
  EXPECT_THROW(Dppro::from_paths(3, pairs, {}), std::invalid_argument);
  EXPECT_THROW(Dppro::from_paths(3, pairs, {PathWalk::from_parts({0, 1}, {1})}), std::invalid_argument);
}

}  // namespace
}  // namespace pathoracle
