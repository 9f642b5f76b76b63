#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vcbsp {

/// Dense vertex identifier in [0, V).
using VertexId = std::uint32_t;
/// Index into a target array; wide enough for graphs with more than 2^32 edges.
using EdgeIndex = std::uint64_t;
/// Identifier as it appears in the input file.
using OriginalId = std::uint64_t;

enum class Directedness { directed, undirected };

struct Edge {
  VertexId src;
  VertexId dst;
};

/// Raised when an edge-list file cannot be parsed. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Compressed offset layout: offsets has V+1 entries, targets has E.
struct Adjacency {
  std::vector<EdgeIndex> offsets;
  std::vector<VertexId> targets;
};

/// Builds out- and in-adjacency from dense edges. Neighbours of each vertex
/// are sorted ascending. Throws std::out_of_range if an endpoint is >= V.
std::pair<Adjacency, Adjacency> build_adjacency(std::span<const Edge> edges,
                                                VertexId vertex_count);

/// Immutable graph with out- and in-adjacency and an original-ID mapping.
/// Safe to read concurrently once constructed.
class Graph {
 public:
  Graph() = default;

  /// Builds from dense edges. `original_ids` may be empty, in which case the
  /// identity mapping is used.
  Graph(VertexId vertex_count, std::span<const Edge> edges,
        std::vector<OriginalId> original_ids = {});

  VertexId vertex_count() const noexcept { return vertex_count_; }
  EdgeIndex edge_count() const noexcept { return out_.targets.size(); }

  std::span<const VertexId> out_neighbours(VertexId v) const noexcept {
    return range(out_, v);
  }
  std::span<const VertexId> in_neighbours(VertexId v) const noexcept {
    return range(in_, v);
  }
  EdgeIndex out_degree(VertexId v) const noexcept {
    return out_.offsets[v + 1] - out_.offsets[v];
  }
  EdgeIndex in_degree(VertexId v) const noexcept {
    return in_.offsets[v + 1] - in_.offsets[v];
  }

  const Adjacency& out_adjacency() const noexcept { return out_; }
  const Adjacency& in_adjacency() const noexcept { return in_; }

  OriginalId original_id(VertexId v) const { return original_ids_.at(v); }
  const std::vector<OriginalId>& original_ids() const noexcept {
    return original_ids_;
  }
  std::optional<VertexId> dense_id(OriginalId id) const;

 private:
  static std::span<const VertexId> range(const Adjacency& a,
                                         VertexId v) noexcept {
    return {a.targets.data() + a.offsets[v],
            static_cast<std::size_t>(a.offsets[v + 1] - a.offsets[v])};
  }

  VertexId vertex_count_ = 0;
  Adjacency out_;
  Adjacency in_;
  std::vector<OriginalId> original_ids_;
  std::unordered_map<OriginalId, VertexId> dense_of_;
};

/// Parses a SNAP-style edge list held in memory. Lines starting with '#' and
/// blank lines are skipped. Dense IDs are assigned in order of first
/// appearance. For undirected input each pair yields both directions.
Graph parse_edge_list(std::string_view text, Directedness directedness);

/// Reads and parses an edge-list file. Throws std::runtime_error on I/O
/// failure and ParseError on malformed content.
Graph load_edge_list(const std::filesystem::path& path,
                     Directedness directedness);

}  // namespace vcbsp
