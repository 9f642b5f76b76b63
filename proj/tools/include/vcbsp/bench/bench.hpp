#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcbsp/graph.hpp"
#include "vcbsp/run_report.hpp"

namespace vcbsp::bench {

enum class Algorithm { pagerank, cc, sssp };
enum class ReportFormat { text, kv };

/// Process exit codes of vcbsp-bench.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kLoadError = 2,
  kEngineGuard = 3,
  kOutputError = 4,
};

struct BenchConfig {
  std::filesystem::path graph;
  Directedness directedness = Directedness::undirected;
  Algorithm algorithm = Algorithm::pagerank;
  EngineConfig engine;
  std::uint64_t iterations = 10;
  /// Original id; defaults to the original id of dense vertex 0.
  std::optional<OriginalId> source;
  std::optional<std::filesystem::path> output;
  ReportFormat format = ReportFormat::text;
};

/// Carries the exit code the process should terminate with. Code kSuccess is
/// used for --help, with the help text as the message.
class BenchError : public std::runtime_error {
 public:
  BenchError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Parses command-line flags into a validated config. Throws BenchError.
BenchConfig parse_args(int argc, const char* const* argv);

/// Loads the graph, runs the algorithm, writes the optional results file and
/// returns the report. Only the engine call is timed; peak RSS is sampled
/// after the results are written. Throws BenchError.
RunReport run_benchmark(const BenchConfig& config);

/// Renders a report. The kv format is one `key=value` per line.
std::string write_report(const RunReport& report, ReportFormat format);

/// Per-vertex result lines "original_id\tvalue\n" in ascending original id.
/// Exposed for testing; `values` are already rendered, in dense order.
void write_results(std::ostream& out, const Graph& graph,
                   const std::vector<std::string>& values);

}  // namespace vcbsp::bench
