#pragma once

#include <algorithm>
#include <cstdint>

#include "vcbsp/engine.hpp"

namespace vcbsp::algorithms {

/// Fixed-iteration PageRank with damping 0.85.
///
/// Superstep 0 seeds every rank with 1/V; each later superstep sets the rank
/// to 0.15/V + 0.85 * (sum of received contributions). While the superstep
/// index is below `iterations` a vertex broadcasts rank / out-degree, then it
/// halts. Vertices without out-neighbours never broadcast.
///
/// Not systematic-halt: do not combine with Selection::bypass.
struct PageRank {
  using value_type = double;
  using message_type = double;

  std::uint64_t iterations = 10;

  template <class Ctx>
  void compute(Ctx& ctx) const {
    const double n = ctx.vertex_count();
    if (ctx.is_first_superstep()) {
      ctx.value() = 1.0 / n;
    } else {
      double sum = 0.0;
      while (auto msg = ctx.next_message()) sum += *msg;
      ctx.value() = 0.15 / n + 0.85 * sum;
    }

    if (ctx.superstep() < iterations) {
      if (ctx.out_degree() > 0)
        ctx.broadcast(ctx.value() / static_cast<double>(ctx.out_degree()));
    } else {
      ctx.vote_to_halt();
    }
  }

  void combine(double& acc, const double& in) const { acc += in; }
};

/// Runs PageRank. PageRank always executes iterations + 1 supersteps, so an
/// unset guard is raised to at least that on small graphs.
inline RunResult<PageRank> pagerank(const Graph& graph, std::uint64_t iterations,
                                    const EngineConfig& config) {
  EngineConfig c = config;
  if (!c.max_supersteps)
    c.max_supersteps = std::max(2 * std::uint64_t{graph.vertex_count()} + 1, iterations + 1);
  return run(graph, PageRank{iterations}, c);
}

}  // namespace vcbsp::algorithms
