#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "support.hpp"
#include "vcbsp/algorithms.hpp"
#include "vcbsp/oracles.hpp"
#include "vcbsp/synthetic.hpp"

namespace vcbsp {
namespace {

using namespace algorithms;
using ::vcbsp::testing::all_configs;
using ::vcbsp::testing::config;
using ::vcbsp::testing::describe;
using ::vcbsp::testing::make_graph;
using ::vcbsp::testing::make_undirected;

double relative_error(double got, double want, VertexId n) {
  return std::abs(got - want) / std::max(want, 1.0 / n);
}

TEST(PageRank, SingleEdgeOneIteration) {
  Graph g = make_graph(2, {{0, 1}});
  for (Delivery d : {Delivery::push, Delivery::pull}) {
    auto r = pagerank(g, 1, config(d, Selection::naive));
    EXPECT_DOUBLE_EQ(r.values[0], 0.075);
    EXPECT_DOUBLE_EQ(r.values[1], 0.5);
    EXPECT_EQ(r.report.supersteps, 2u);
  }
}

TEST(PageRank, ZeroIterationsKeepsUniformRanks) {
  Graph g = synthetic::random(40, 100, Directedness::directed, 2);
  auto r = pagerank(g, 0, config(Delivery::push, Selection::naive));
  for (double v : r.values) EXPECT_DOUBLE_EQ(v, 1.0 / 40);
  EXPECT_EQ(r.report.supersteps, 1u);
  EXPECT_EQ(r.report.counters.messages_sent, 0u);
}

TEST(PageRank, CombineIsAddition) {
  PageRank p;
  double acc = 0.2;
  p.combine(acc, 0.3);
  EXPECT_DOUBLE_EQ(acc, 0.5);
  acc = 0.7;
  p.combine(acc, 0.0);
  EXPECT_EQ(acc, 0.7);
}

TEST(PageRank, CombineOrderOnlyPerturbsRounding) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 1e-3);
  PageRank p;
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 3> xs{dist(rng), dist(rng), dist(rng)};
    std::sort(xs.begin(), xs.end());
    const double sequential = xs[0] + xs[1] + xs[2];
    do {
      double acc = xs[0];
      p.combine(acc, xs[1]);
      p.combine(acc, xs[2]);
      EXPECT_NEAR(acc, sequential, 1e-15);
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
}

TEST(PageRank, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = synthetic::random(300, 1500, Directedness::directed, seed);
    auto want = oracle::pagerank(g, 10).values;
    for (Delivery d : {Delivery::push, Delivery::pull}) {
      for (unsigned w : {1u, 3u}) {
        auto got = pagerank(g, 10, config(d, Selection::naive, w)).values;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          ASSERT_LE(relative_error(got[v], want[v], g.vertex_count()), 1e-9);
      }
    }
  }
}

TEST(PageRank, PushAndPullAgreeWithinRounding) {
  for (std::uint64_t seed = 20; seed < 25; ++seed) {
    Graph g = synthetic::random(2000, 20000, Directedness::directed, seed);
    auto push = pagerank(g, 10, config(Delivery::push, Selection::naive, 4)).values;
    auto pull = pagerank(g, 10, config(Delivery::pull, Selection::naive, 4)).values;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      ASSERT_LE(std::abs(push[v] - pull[v]) / std::max(pull[v], 1e-300), 1e-10);
  }
}

TEST(PageRank, MassConservedWithoutDanglingVertices) {
  // Every vertex of a cycle plus random chords has out-degree >= 1.
  std::vector<Edge> edges;
  const VertexId n = 200;
  std::mt19937_64 rng(9);
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  for (int i = 0; i < 600; ++i)
    edges.push_back({static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)});
  Graph g(n, edges);
  for (std::uint64_t k = 1; k <= 10; ++k) {
    auto r = pagerank(g, k, config(Delivery::push, Selection::naive));
    EXPECT_NEAR(std::accumulate(r.values.begin(), r.values.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(PageRank, MassNonIncreasingWithDanglingVertices) {
  Graph g = synthetic::random(200, 300, Directedness::directed, 4);
  VertexId dangling = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) dangling += g.out_degree(v) == 0;
  ASSERT_GT(dangling, 0u);
  double previous = 1.0 + 1e-9;
  for (std::uint64_t k = 0; k <= 10; ++k) {
    auto r = pagerank(g, k, config(Delivery::pull, Selection::naive));
    double mass = std::accumulate(r.values.begin(), r.values.end(), 0.0);
    EXPECT_LE(mass, previous + 1e-12);
    EXPECT_LE(mass, 1.0 + 1e-9);
    for (double v : r.values) EXPECT_GE(v, 0.0);
    previous = mass;
  }
}

TEST(ConnectedComponents, PathPlusPair) {
  Graph g = make_undirected(5, {{0, 1}, {1, 2}, {3, 4}});
  for (const auto& cfg : all_configs({1, 2})) {
    EXPECT_EQ(connected_components(g, cfg).values,
              (std::vector<VertexId>{0, 0, 0, 3, 3}))
        << describe(cfg);
  }
}

TEST(ConnectedComponents, IsolatedVertexRunsOnlyFirstSuperstep) {
  Graph g = make_undirected(6, {{0, 1}, {1, 2}, {3, 4}});
  for (const auto& cfg : all_configs({1})) {
    auto c = cfg;
    c.record_run_sets = true;
    auto r = connected_components(g, c);
    EXPECT_EQ(r.values[5], 5u);
    for (std::size_t s = 1; s < r.report.run_sets.size(); ++s)
      EXPECT_FALSE(std::binary_search(r.report.run_sets[s].begin(),
                                      r.report.run_sets[s].end(), VertexId{5}));
  }
}

TEST(ConnectedComponents, MinCombiner) {
  ConnectedComponents cc;
  VertexId acc = 5;
  cc.combine(acc, 3);
  EXPECT_EQ(acc, 3u);
  acc = 3;
  cc.combine(acc, 5);
  EXPECT_EQ(acc, 3u);
  std::array<VertexId, 3> xs{4, 6, 9};
  do {
    VertexId a = xs[0];
    cc.combine(a, xs[1]);
    cc.combine(a, xs[2]);
    EXPECT_EQ(a, 4u);
  } while (std::next_permutation(xs.begin(), xs.end()));
}

TEST(ConnectedComponents, LabelInvariants) {
  Graph g = synthetic::random(500, 600, Directedness::undirected, 12);
  auto labels = connected_components(g, config(Delivery::push, Selection::bypass, 2)).values;
  auto want = oracle::connected_components(g).values;
  EXPECT_EQ(labels, want);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EXPECT_LE(labels[v], v);
    EXPECT_EQ(labels[labels[v]], labels[v]);  // label vertex is in the component
  }
}

TEST(ConnectedComponents, FixedPointBroadcastsOnlyOnce) {
  Graph g = synthetic::random(400, 500, Directedness::undirected, 21);
  auto labels = oracle::connected_components(g).values;
  for (const auto& cfg : all_configs({1, 2})) {
    auto r = run(g, ConnectedComponents{true}, [&](VertexId v) { return labels[v]; }, cfg);
    EXPECT_EQ(r.values, labels) << describe(cfg);
    for (std::size_t s = 1; s < r.report.per_superstep.size(); ++s)
      EXPECT_EQ(r.report.per_superstep[s].messages_sent, 0u);
  }
}

TEST(ShortestPaths, UnreachableComponentStaysInfinite) {
  Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  for (const auto& cfg : all_configs({1, 2})) {
    EXPECT_EQ(shortest_paths(g, 0, cfg).values,
              (std::vector<Distance>{0, 1, 2, kUnreachable, kUnreachable}));
  }
}

TEST(ShortestPaths, SourceOutOfRange) {
  Graph g = synthetic::chain(3);
  EXPECT_THROW(shortest_paths(g, 3, EngineConfig{}), std::invalid_argument);
}

TEST(ShortestPaths, TriangleInequalityAndPredecessor) {
  Graph g = synthetic::random(800, 2400, Directedness::directed, 8);
  auto d = shortest_paths(g, 5, config(Delivery::pull, Selection::bypass, 2)).values;
  EXPECT_EQ(d[5], 0u);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (d[u] == kUnreachable) continue;
    for (VertexId v : g.out_neighbours(u)) EXPECT_LE(d[v], d[u] + 1);
    if (d[u] > 0) {
      auto in = g.in_neighbours(u);
      EXPECT_TRUE(std::any_of(in.begin(), in.end(), [&](VertexId p) { return d[p] == d[u] - 1; }));
    }
  }
}

TEST(SystematicHalt, MinLabelProgramsAlwaysVote) {
  Graph g = synthetic::random(500, 3000, Directedness::undirected, 14);
  for (const auto& cfg : all_configs({1, 2})) {
    auto cc = connected_components(g, cfg).report.counters;
    EXPECT_EQ(cc.halt_votes, cc.vertices_computed);
    auto sp = shortest_paths(g, 0, cfg).report.counters;
    EXPECT_EQ(sp.halt_votes, sp.vertices_computed);
  }
  auto pr = pagerank(g, 3, config(Delivery::push, Selection::naive)).report.counters;
  EXPECT_LT(pr.halt_votes, pr.vertices_computed);
}

TEST(OracleAgreement, ComponentsAndDistancesAcrossConfigs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    VertexId n = 1 + rng() % 400;
    Graph u = synthetic::random(n, rng() % 1200, Directedness::undirected, rng());
    Graph d = synthetic::random(n, rng() % 1200, Directedness::directed, rng());
    auto labels = oracle::connected_components(u).values;
    VertexId src = rng() % n;
    auto dist = oracle::shortest_paths(d, src).values;
    for (const auto& cfg : all_configs({1, 4})) {
      EXPECT_EQ(connected_components(u, cfg).values, labels) << describe(cfg);
      EXPECT_EQ(shortest_paths(d, src, cfg).values, dist) << describe(cfg);
    }
  }
}

}  // namespace
}  // namespace vcbsp
