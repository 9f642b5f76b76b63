#include "vcbsp/run_report.hpp"

namespace vcbsp {

std::string_view to_string(Delivery d) noexcept {
  return d == Delivery::push ? "push" : "pull";
}

std::string_view to_string(Selection s) noexcept {
  return s == Selection::naive ? "naive" : "bypass";
}

Counters& Counters::operator+=(const Counters& o) noexcept {
  vertices_computed += o.vertices_computed;
  messages_sent += o.messages_sent;
  combines_applied += o.combines_applied;
  status_checks += o.status_checks;
  exclusion_acquisitions += o.exclusion_acquisitions;
  outbox_scans += o.outbox_scans;
  halt_votes += o.halt_votes;
  return *this;
}

SuperstepLimitExceeded::SuperstepLimitExceeded(RunReport partial)
    : std::runtime_error("superstep limit of " +
                         std::to_string(partial.supersteps) +
                         " reached before the program quiesced"),
      report_(std::make_shared<const RunReport>(std::move(partial))) {}

}  // namespace vcbsp
