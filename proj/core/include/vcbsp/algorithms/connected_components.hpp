#pragma once

#include "vcbsp/engine.hpp"

namespace vcbsp::algorithms {

/// Hash-Min connected components: every vertex ends labelled with the
/// smallest dense id it can be reached from. Expects each edge stored in both
/// directions. Halts on every call, so bypass selection is sound.
struct ConnectedComponents {
  using value_type = VertexId;
  using message_type = VertexId;

  /// Start from the initialiser's labels instead of each vertex's own id.
  bool warm_start = false;

  template <class Ctx>
  void compute(Ctx& ctx) const {
    if (ctx.is_first_superstep()) {
      if (!warm_start) ctx.value() = ctx.id();
      ctx.broadcast(ctx.value());
    } else {
      const VertexId old = ctx.value();
      while (auto msg = ctx.next_message())
        if (*msg < ctx.value()) ctx.value() = *msg;
      if (ctx.value() < old) ctx.broadcast(ctx.value());
    }
    ctx.vote_to_halt();
  }

  void combine(VertexId& acc, const VertexId& in) const {
    if (acc > in) acc = in;
  }
};

inline RunResult<ConnectedComponents> connected_components(
    const Graph& graph, const EngineConfig& config) {
  return run(graph, ConnectedComponents{}, config);
}

}  // namespace vcbsp::algorithms
