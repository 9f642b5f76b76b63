#include "vcbsp/synthetic.hpp"

#include <random>
#include <vector>

namespace vcbsp::synthetic {

Graph chain(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph star(VertexId leaves, bool inward) {
  std::vector<Edge> edges;
  edges.reserve(leaves);
  for (VertexId v = 1; v <= leaves; ++v)
    edges.push_back(inward ? Edge{v, 0} : Edge{0, v});
  return Graph(leaves + 1, edges);
}

Graph random(VertexId vertices, std::uint64_t edges, Directedness directedness,
             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, vertices == 0 ? 0 : vertices - 1);
  std::vector<Edge> list;
  if (vertices > 0) {
    list.reserve(directedness == Directedness::undirected ? 2 * edges : edges);
    for (std::uint64_t i = 0; i < edges; ++i) {
      VertexId a = pick(rng);
      VertexId b = pick(rng);
      list.push_back({a, b});
      if (directedness == Directedness::undirected) list.push_back({b, a});
    }
  }
  return Graph(vertices, list);
}

}  // namespace vcbsp::synthetic
