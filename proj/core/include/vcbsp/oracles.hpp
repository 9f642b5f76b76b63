#pragma once

// Sequential reference implementations used to check engine output. They
// share nothing with the engine beyond the Graph type.

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "vcbsp/graph.hpp"

namespace vcbsp::oracle {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

template <class T>
struct OracleResult {
  std::vector<T> values;  // dense-id order
  std::string_view algorithm;
  std::uint64_t parameter = 0;  // iterations or source; 0 for components
};

/// Synchronous power iteration: r0 = 1/V, then k rounds of
/// r(v) = 0.15/V + 0.85 * sum over in-neighbours u with outdeg(u) > 0 of
/// r(u)/outdeg(u), summed in ascending in-neighbour order.
OracleResult<double> pagerank(const Graph& graph, std::uint64_t iterations);

/// Union-find labels: each vertex gets the smallest dense id in its
/// (weakly) connected component.
OracleResult<VertexId> connected_components(const Graph& graph);

/// Breadth-first hop distances over out-edges. Throws std::out_of_range for a
/// bad source.
OracleResult<std::uint32_t> shortest_paths(const Graph& graph, VertexId source);

}  // namespace vcbsp::oracle
