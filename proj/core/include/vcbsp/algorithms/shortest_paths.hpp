#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "vcbsp/engine.hpp"

namespace vcbsp::algorithms {

/// Hop count. Unreached vertices hold kUnreachable.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Unit-weight single-source shortest paths over out-edges (Bellman-Ford
/// style relaxation). Halts on every call, so bypass selection is sound.
struct ShortestPaths {
  using value_type = Distance;
  using message_type = Distance;

  VertexId source = 0;

  template <class Ctx>
  void compute(Ctx& ctx) const {
    if (ctx.is_first_superstep()) {
      if (ctx.id() == source) {
        ctx.value() = 0;
        ctx.broadcast(ctx.value() + 1);
      } else {
        ctx.value() = kUnreachable;
      }
    } else {
      Distance best = kUnreachable;
      while (auto msg = ctx.next_message())
        if (*msg < best) best = *msg;
      if (best < ctx.value()) {
        ctx.value() = best;
        ctx.broadcast(ctx.value() + 1);
      }
    }
    ctx.vote_to_halt();
  }

  void combine(Distance& acc, const Distance& in) const {
    if (acc > in) acc = in;
  }
};

/// Throws std::invalid_argument when `source` is not a vertex of `graph`.
inline RunResult<ShortestPaths> shortest_paths(const Graph& graph, VertexId source,
                                               const EngineConfig& config) {
  if (source >= graph.vertex_count())
    throw std::invalid_argument("source " + std::to_string(source) +
                                " is not a vertex (V = " +
                                std::to_string(graph.vertex_count()) + ")");
  return run(graph, ShortestPaths{source}, config);
}

}  // namespace vcbsp::algorithms
