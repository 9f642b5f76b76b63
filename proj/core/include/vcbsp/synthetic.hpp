#pragma once

#include <cstdint>

#include "vcbsp/graph.hpp"

// Small graph generators for tests, benchmarks and examples.
namespace vcbsp::synthetic {

/// Directed path 0 -> 1 -> ... -> n-1.
Graph chain(VertexId n);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Graph cycle(VertexId n);

/// Star with `leaves` leaves around vertex 0. `inward` points every leaf at
/// the center, otherwise the center points at every leaf.
Graph star(VertexId leaves, bool inward);

/// Uniform random multigraph with `edges` edges drawn independently (self
/// loops and duplicates allowed). Undirected graphs store each pair twice.
Graph random(VertexId vertices, std::uint64_t edges, Directedness directedness,
             std::uint64_t seed);

}  // namespace vcbsp::synthetic
