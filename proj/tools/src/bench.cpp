#include "vcbsp/bench/bench.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "vcbsp/algorithms.hpp"
#include "vcbsp/peak_rss.hpp"

namespace vcbsp::bench {

BenchConfig parse_args(int argc, const char* const* argv) {
  BenchConfig cfg;
  bool directed = false;
  std::optional<std::uint64_t> max_supersteps;

  CLI::App app{"Run one vertex-centric algorithm on an edge-list graph"};
  app.name("vcbsp-bench");
  app.add_option("--graph", cfg.graph, "SNAP-style edge list")->required();
  app.add_flag("--directed", directed, "Treat each line as one directed edge "
                                       "(default: undirected, both directions)");
  app.add_option("--algorithm", cfg.algorithm, "pagerank | cc | sssp")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Algorithm>{{"pagerank", Algorithm::pagerank},
                                           {"cc", Algorithm::cc},
                                           {"sssp", Algorithm::sssp}}));
  std::string delivery = "push", selection = "naive";
  app.add_option("--delivery", delivery, "push | pull")
      ->check(CLI::IsMember({"push", "pull"}));
  app.add_option("--selection", selection, "naive | bypass")
      ->check(CLI::IsMember({"naive", "bypass"}));
  app.add_option("--workers", cfg.engine.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--iterations", cfg.iterations, "PageRank iterations");
  app.add_option("--source", cfg.source, "SSSP source (original id)");
  app.add_option("--max-supersteps", max_supersteps,
                 "Superstep guard (default 2V+1)");
  app.add_option("--output", cfg.output, "Write per-vertex results here");
  app.add_option("--format", cfg.format, "Report format: text | kv")
      ->transform(CLI::CheckedTransformer(std::map<std::string, ReportFormat>{
          {"text", ReportFormat::text}, {"kv", ReportFormat::kv}}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw BenchError(kSuccess, app.help());
  } catch (const CLI::ParseError& e) {
    throw BenchError(kUsage, std::string(e.what()) + "\n\n" + app.help());
  }

  cfg.directedness = directed ? Directedness::directed : Directedness::undirected;
  cfg.engine.max_supersteps = max_supersteps;
  cfg.engine.delivery = delivery == "pull" ? Delivery::pull : Delivery::push;
  cfg.engine.selection = selection == "bypass" ? Selection::bypass : Selection::naive;
  if (cfg.algorithm == Algorithm::pagerank &&
      cfg.engine.selection == Selection::bypass)
    throw BenchError(kUsage,
                     "pagerank does not halt on every superstep and cannot run "
                     "with --selection bypass");
  return cfg;
}

void write_results(std::ostream& out, const Graph& graph,
                   const std::vector<std::string>& values) {
  std::vector<VertexId> order(graph.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return graph.original_id(a) < graph.original_id(b);
  });
  for (VertexId v : order) out << graph.original_id(v) << '\t' << values[v] << '\n';
}

namespace {

std::string format_rank(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", r);
  return buf;
}

struct Outcome {
  RunReport report;
  std::vector<std::string> rendered;
};

template <class Result, class Render>
Outcome render(Result&& result, Render render_one) {
  Outcome out{std::move(result.report), {}};
  out.rendered.reserve(result.values.size());
  for (const auto& v : result.values) out.rendered.push_back(render_one(v));
  return out;
}

Outcome run_algorithm(const BenchConfig& cfg, const Graph& graph) {
  using namespace algorithms;
  switch (cfg.algorithm) {
    case Algorithm::pagerank:
      return render(pagerank(graph, cfg.iterations, cfg.engine), format_rank);
    case Algorithm::cc:
      return render(connected_components(graph, cfg.engine), [&](VertexId label) {
        return std::to_string(graph.original_id(label));
      });
    case Algorithm::sssp: {
      VertexId source = 0;
      if (cfg.source) {
        auto dense = graph.dense_id(*cfg.source);
        if (!dense)
          throw BenchError(kUsage, "source " + std::to_string(*cfg.source) +
                                       " does not appear in the graph");
        source = *dense;
      }
      if (graph.vertex_count() == 0)
        throw BenchError(kUsage, "sssp needs a non-empty graph");
      return render(shortest_paths(graph, source, cfg.engine), [](Distance d) {
        return d == kUnreachable ? std::string("inf") : std::to_string(d);
      });
    }
  }
  throw BenchError(kUsage, "unknown algorithm");
}

}  // namespace

RunReport run_benchmark(const BenchConfig& cfg) {
  Graph graph;
  try {
    graph = load_edge_list(cfg.graph, cfg.directedness);
  } catch (const std::exception& e) {
    throw BenchError(kLoadError, "failed to load " + cfg.graph.string() + ": " + e.what());
  }

  Outcome outcome;
  try {
    outcome = run_algorithm(cfg, graph);
  } catch (const SuperstepLimitExceeded& e) {
    throw BenchError(kEngineGuard, e.what());
  } catch (const ContractViolation& e) {
    throw BenchError(kEngineGuard, e.what());
  }

  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary | std::ios::trunc);
    if (out) write_results(out, graph, outcome.rendered);
    out.flush();
    if (!out) throw BenchError(kOutputError, "cannot write " + cfg.output->string());
  }

  outcome.report.peak_rss_bytes = peak_rss_bytes();
  return std::move(outcome.report);
}

std::string write_report(const RunReport& report, ReportFormat format) {
  std::ostringstream out;
  const Counters& c = report.counters;
  if (format == ReportFormat::kv) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.9f", report.processing_seconds);
    out << "processing_seconds=" << seconds << '\n'
        << "peak_rss_bytes=" << report.peak_rss_bytes << '\n'
        << "supersteps=" << report.supersteps << '\n'
        << "vertices_computed=" << c.vertices_computed << '\n'
        << "messages_sent=" << c.messages_sent << '\n'
        << "combines_applied=" << c.combines_applied << '\n'
        << "status_checks=" << c.status_checks << '\n'
        << "outbox_scans=" << c.outbox_scans << '\n';
    return out.str();
  }
  out << "processing time     " << report.processing_seconds << " s\n"
      << "peak RSS            " << report.peak_rss_bytes / (1024.0 * 1024.0) << " MiB\n"
      << "supersteps          " << report.supersteps << '\n'
      << "vertices computed   " << c.vertices_computed << '\n'
      << "messages sent       " << c.messages_sent << '\n'
      << "combines applied    " << c.combines_applied << '\n'
      << "status checks       " << c.status_checks << '\n'
      << "lock acquisitions   " << c.exclusion_acquisitions << '\n'
      << "outbox scans        " << c.outbox_scans << '\n'
      << "message slots       " << report.message_slots << '\n';
  return out.str();
}

}  // namespace vcbsp::bench
