#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "vcbsp/graph.hpp"
#include "vcbsp/run_report.hpp"

namespace vcbsp::testing {

inline Graph make_graph(VertexId n, std::initializer_list<Edge> edges) {
  return Graph(n, std::vector<Edge>(edges));
}

/// Each pair stored in both directions.
inline Graph make_undirected(VertexId n, std::initializer_list<Edge> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  return Graph(n, edges);
}

inline EngineConfig config(Delivery d, Selection s, unsigned workers = 1) {
  EngineConfig c;
  c.delivery = d;
  c.selection = s;
  c.workers = workers;
  return c;
}

/// {push, pull} x {naive, bypass} x the given worker counts.
inline std::vector<EngineConfig> all_configs(std::initializer_list<unsigned> workers) {
  std::vector<EngineConfig> out;
  for (Delivery d : {Delivery::push, Delivery::pull})
    for (Selection s : {Selection::naive, Selection::bypass})
      for (unsigned w : workers) out.push_back(config(d, s, w));
  return out;
}

inline std::string describe(const EngineConfig& c) {
  return std::string(to_string(c.delivery)) + "/" + std::string(to_string(c.selection)) +
         "/" + std::to_string(c.workers);
}

}  // namespace vcbsp::testing
