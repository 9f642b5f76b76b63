#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vcbsp/graph.hpp"

namespace vcbsp {

/// Half-open range [first, second) of the w-th of `parts` even static slices
/// of n items.
inline std::pair<std::size_t, std::size_t> even_slice(std::size_t n,
                                                      std::size_t parts,
                                                      std::size_t w) noexcept {
  return {n * w / parts, n * (w + 1) / parts};
}

/// Vertices scheduled for the next superstep. Each worker appends to its own
/// list during a superstep; a single coordinator merges them at the barrier.
/// Callers guarantee that no id is appended twice within a superstep.
class Frontier {
 public:
  explicit Frontier(unsigned workers) : local_(workers) {}

  void append(unsigned worker, VertexId v) { local_[worker].ids.push_back(v); }

  /// Replaces the merged list with the concatenation of the worker lists and
  /// empties the worker lists.
  void merge() {
    merged_.clear();
    for (auto& l : local_) {
      merged_.insert(merged_.end(), l.ids.begin(), l.ids.end());
      l.ids.clear();
    }
  }

  std::span<const VertexId> merged() const noexcept { return merged_; }

  /// The w-th static slice of the merged list.
  std::span<const VertexId> slice(unsigned worker) const noexcept {
    auto [b, e] = even_slice(merged_.size(), local_.size(), worker);
    return std::span<const VertexId>(merged_).subspan(b, e - b);
  }

  std::span<const VertexId> pending(unsigned worker) const noexcept {
    return local_[worker].ids;
  }

  unsigned workers() const noexcept { return static_cast<unsigned>(local_.size()); }

 private:
  struct alignas(64) Local {
    std::vector<VertexId> ids;
  };
  std::vector<Local> local_;
  std::vector<VertexId> merged_;
};

}  // namespace vcbsp
