#include "vcbsp/oracles.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace vcbsp::oracle {

OracleResult<double> pagerank(const Graph& graph, std::uint64_t iterations) {
  const VertexId n = graph.vertex_count();
  const double dn = n;
  std::vector<double> rank(n, 1.0 / dn);
  std::vector<double> next(n);
  for (std::uint64_t t = 0; t < iterations; ++t) {
    for (VertexId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (VertexId u : graph.in_neighbours(v)) {
        auto deg = graph.out_degree(u);
        if (deg > 0) sum += rank[u] / static_cast<double>(deg);
      }
      next[v] = 0.15 / dn + 0.85 * sum;
    }
    rank.swap(next);
  }
  return {std::move(rank), "pagerank", iterations};
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(VertexId n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) v = std::exchange(parent_[v], root);
    return root;
  }

  // The smaller root wins, so every root is its set's minimum.
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a < b)
      parent_[b] = a;
    else if (b < a)
      parent_[a] = b;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

OracleResult<VertexId> connected_components(const Graph& graph) {
  const VertexId n = graph.vertex_count();
  DisjointSets sets(n);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : graph.out_neighbours(v)) sets.unite(v, u);
  std::vector<VertexId> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = sets.find(v);
  return {std::move(label), "cc", 0};
}

OracleResult<std::uint32_t> shortest_paths(const Graph& graph, VertexId source) {
  const VertexId n = graph.vertex_count();
  if (source >= n)
    throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId u : graph.out_neighbours(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
    }
  }
  return {std::move(dist), "sssp", source};
}

}  // namespace vcbsp::oracle
