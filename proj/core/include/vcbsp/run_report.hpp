#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcbsp/graph.hpp"

namespace vcbsp {

enum class Delivery { push, pull };
enum class Selection { naive, bypass };

std::string_view to_string(Delivery d) noexcept;
std::string_view to_string(Selection s) noexcept;

struct EngineConfig {
  Delivery delivery = Delivery::push;
  Selection selection = Selection::naive;
  unsigned workers = 1;
  /// Hard cap on supersteps executed; unset means 2*V + 1.
  std::optional<std::uint64_t> max_supersteps;
  /// Record each superstep's run set and activated set in the report.
  bool record_run_sets = false;
};

/// Instrumentation counters. Summed per superstep and over the whole run.
struct Counters {
  std::uint64_t vertices_computed = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t combines_applied = 0;
  std::uint64_t status_checks = 0;
  std::uint64_t exclusion_acquisitions = 0;
  std::uint64_t outbox_scans = 0;
  /// Compute calls that ended with the vertex halted.
  std::uint64_t halt_votes = 0;

  Counters& operator+=(const Counters& o) noexcept;
  friend bool operator==(const Counters&, const Counters&) = default;
};

struct RunReport {
  std::uint64_t supersteps = 0;
  double processing_seconds = 0.0;
  std::uint64_t peak_rss_bytes = 0;
  Counters counters;
  std::vector<Counters> per_superstep;
  /// Number of single-slot message buffers allocated (mailboxes and outboxes).
  std::uint64_t message_slots = 0;

  /// Only filled with EngineConfig::record_run_sets. Both sorted ascending.
  /// run_sets[s] holds the vertices computed in superstep s; activated[s]
  /// the vertices that a message sent in superstep s is addressed to.
  std::vector<std::vector<VertexId>> run_sets;
  std::vector<std::vector<VertexId>> activated;
};

/// The run hit EngineConfig::max_supersteps before quiescing.
class SuperstepLimitExceeded : public std::runtime_error {
 public:
  explicit SuperstepLimitExceeded(RunReport partial);
  const RunReport& report() const noexcept { return *report_; }

 private:
  std::shared_ptr<const RunReport> report_;
};

/// A vertex program broke an engine contract (e.g. two broadcasts from one
/// vertex in a pull-mode superstep).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vcbsp
