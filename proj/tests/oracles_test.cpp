#include <gtest/gtest.h>

#include "support.hpp"
#include "vcbsp/oracles.hpp"
#include "vcbsp/synthetic.hpp"

namespace vcbsp {
namespace {

using ::vcbsp::testing::make_graph;
using ::vcbsp::testing::make_undirected;

TEST(OraclePageRank, CycleStaysUniform) {
  Graph g = synthetic::cycle(3);
  for (std::uint64_t k : {0u, 1u, 7u}) {
    auto r = oracle::pagerank(g, k);
    for (double v : r.values) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(r.parameter, k);
  }
}

TEST(OraclePageRank, SingleEdgeByHand) {
  auto r = oracle::pagerank(make_graph(2, {{0, 1}}), 1);
  EXPECT_DOUBLE_EQ(r.values[0], 0.075);
  EXPECT_DOUBLE_EQ(r.values[1], 0.5);
}

TEST(OraclePageRank, ZeroIterations) {
  auto r = oracle::pagerank(synthetic::random(8, 20, Directedness::directed, 1), 0);
  for (double v : r.values) EXPECT_EQ(v, 1.0 / 8);
}

TEST(OracleComponents, Examples) {
  EXPECT_EQ(oracle::connected_components(make_graph(3, {})).values,
            (std::vector<VertexId>{0, 1, 2}));
  Graph k4 = make_undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(oracle::connected_components(k4).values, (std::vector<VertexId>{0, 0, 0, 0}));
  Graph pp = make_undirected(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(oracle::connected_components(pp).values, (std::vector<VertexId>{0, 0, 0, 3, 3}));
}

TEST(OracleComponents, MinimumIsNotTheFirstUnion) {
  // Unions 4-3, 3-2, 2-0 in edge order; root must end as 0.
  Graph g = make_undirected(5, {{4, 3}, {3, 2}, {2, 0}, {1, 1}});
  EXPECT_EQ(oracle::connected_components(g).values, (std::vector<VertexId>{0, 1, 0, 0, 0}));
}

TEST(OracleShortestPaths, Examples) {
  EXPECT_EQ(oracle::shortest_paths(synthetic::chain(3), 0).values,
            (std::vector<std::uint32_t>{0, 1, 2}));
  auto isolated = oracle::shortest_paths(make_graph(3, {{1, 2}}), 0).values;
  EXPECT_EQ(isolated, (std::vector<std::uint32_t>{0, oracle::kUnreachable, oracle::kUnreachable}));
  EXPECT_THROW(oracle::shortest_paths(synthetic::chain(3), 3), std::out_of_range);
}

TEST(Oracles, Deterministic) {
  Graph g = synthetic::random(500, 4000, Directedness::directed, 99);
  EXPECT_EQ(oracle::pagerank(g, 10).values, oracle::pagerank(g, 10).values);
  EXPECT_EQ(oracle::shortest_paths(g, 3).values, oracle::shortest_paths(g, 3).values);
  EXPECT_EQ(oracle::connected_components(g).values, oracle::connected_components(g).values);
}

}  // namespace
}  // namespace vcbsp
