#pragma once

// Vertex-centric bulk-synchronous engine.
//
// A vertex program supplies a value type, a message type, a compute step that
// runs on one vertex through a Context, and an associative, commutative
// combine step. Each vertex owns a single message slot per buffer: messages
// are combined on arrival, so message storage is linear in V, never in E.
//
// Delivery
//   push: senders write the recipient's next mailbox under that recipient's
//         spin lock.
//   pull: a broadcast writes the sender's own next outbox; at the start of the
//         following superstep each vertex gathers the current outboxes of its
//         in-neighbours without any locking. At most one broadcast per vertex
//         per superstep, and send() is unavailable.
//
// Selection
//   naive:  every vertex is checked each superstep and runs if it is not
//           halted or has a message.
//   bypass: the next run set is built from message recipients. Only sound for
//           programs that vote to halt on every compute call.
//
// All mailboxes and outboxes are double buffered and swap roles at the
// barrier, so a message sent in superstep s is first visible in s+1.

#include <algorithm>
#include <array>
#include <atomic>
#include <barrier>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "vcbsp/frontier.hpp"
#include "vcbsp/graph.hpp"
#include "vcbsp/peak_rss.hpp"
#include "vcbsp/run_report.hpp"
#include "vcbsp/spin_lock.hpp"

namespace vcbsp {

template <class P>
concept VertexProgram =
    requires {
      typename P::value_type;
      typename P::message_type;
    } && std::semiregular<typename P::message_type> &&
    std::movable<typename P::value_type> &&
    requires(const P& p, typename P::message_type& acc,
             const typename P::message_type& in) {
      p.combine(acc, in);
    };

template <VertexProgram P>
struct RunResult {
  std::vector<typename P::value_type> values;
  RunReport report;
};

namespace detail {
template <VertexProgram P>
class Runtime;
}

/// Per-call view of one vertex, handed to P::compute.
template <VertexProgram P>
class Context {
 public:
  using value_type = typename P::value_type;
  using message_type = typename P::message_type;

  VertexId id() const noexcept { return vertex_; }
  std::uint64_t superstep() const noexcept;
  bool is_first_superstep() const noexcept { return superstep() == 0; }
  VertexId vertex_count() const noexcept;
  EdgeIndex out_degree() const noexcept;
  EdgeIndex in_degree() const noexcept;

  value_type& value() noexcept;
  const value_type& value() const noexcept;

  /// The single combined message delivered this superstep, consumed on
  /// first call.
  std::optional<message_type> next_message();

  /// Push delivery only.
  void send(VertexId dst, const message_type& msg);
  void broadcast(const message_type& msg);
  void vote_to_halt() noexcept;

 private:
  friend class detail::Runtime<P>;
  Context(detail::Runtime<P>& rt, unsigned worker, VertexId v) noexcept
      : rt_(rt), worker_(worker), vertex_(v) {}

  detail::Runtime<P>& rt_;
  unsigned worker_;
  VertexId vertex_;
};

template <class P>
concept ComputesWith = requires(const P& p, Context<P>& ctx) { p.compute(ctx); };

namespace detail {

template <VertexProgram P>
class Runtime {
 public:
  using Value = typename P::value_type;
  using Message = typename P::message_type;

  Runtime(const Graph& graph, const P& program, EngineConfig config)
      : graph_(graph),
        program_(program),
        config_(config),
        vertex_count_(graph.vertex_count()),
        frontier_(config.workers),
        workers_(config.workers) {
    const std::size_t n = vertex_count_;
    halted_.assign(n, 0);
    for (auto& slots : mailbox_) slots.allocate(n);
    if (pull()) {
      for (auto& slots : outbox_) slots.allocate(n);
      if (bypass()) scheduled_ = std::make_unique<std::atomic<std::uint8_t>[]>(n);
    } else {
      locks_ = std::make_unique<SpinLock[]>(n);
    }
    for (const auto& slots : mailbox_) report_.message_slots += slots.payload.size();
    for (const auto& slots : outbox_) report_.message_slots += slots.payload.size();
  }

  RunResult<P> run(const std::function<Value(VertexId)>& init) {
    values_.reserve(vertex_count_);
    for (VertexId v = 0; v < vertex_count_; ++v)
      values_.push_back(init ? init(v) : Value{});

    max_supersteps_ =
        config_.max_supersteps.value_or(2 * std::uint64_t{vertex_count_} + 1);

    auto start = std::chrono::steady_clock::now();
    if (vertex_count_ > 0) {
      if (max_supersteps_ == 0) {
        limit_hit_ = true;
      } else if (config_.workers == 1) {
        do {
          phase(0);
          boundary();
        } while (!stop_);
      } else {
        execute_parallel();
      }
    }
    report_.processing_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report_.peak_rss_bytes = peak_rss_bytes();

    if (failure_) std::rethrow_exception(failure_);
    if (limit_hit_) throw SuperstepLimitExceeded(std::move(report_));
    return {std::move(values_), std::move(report_)};
  }

 private:
  friend class Context<P>;

  struct Slots {
    std::vector<Message> payload;
    std::vector<std::uint8_t> present;
    void allocate(std::size_t n) {
      payload.resize(n);
      present.assign(n, 0);
    }
  };

  struct alignas(64) Worker {
    Counters counters;
    std::uint64_t still_active = 0;   // computed and did not halt
    std::uint64_t activations = 0;    // messages that will reach someone
    std::vector<VertexId> ran;        // recording only
    std::vector<VertexId> activated;  // recording only, push
    std::vector<VertexId> broadcasters;
    std::exception_ptr error;
  };

  bool pull() const noexcept { return config_.delivery == Delivery::pull; }
  bool bypass() const noexcept { return config_.selection == Selection::bypass; }

  Slots& mailbox_current() noexcept { return mailbox_[current_]; }
  Slots& mailbox_next() noexcept { return mailbox_[current_ ^ 1]; }
  Slots& outbox_current() noexcept { return outbox_[current_]; }
  Slots& outbox_next() noexcept { return outbox_[current_ ^ 1]; }

  void execute_parallel() {
    std::barrier sync(static_cast<std::ptrdiff_t>(config_.workers),
                      [this]() noexcept { boundary(); });
    auto loop = [this, &sync](unsigned w) {
      for (;;) {
        phase(w);
        sync.arrive_and_wait();
        if (stop_) return;
      }
    };
    std::vector<std::jthread> threads;
    threads.reserve(config_.workers - 1);
    for (unsigned w = 1; w < config_.workers; ++w) threads.emplace_back(loop, w);
    loop(0);
  }

  // Local computation and communication for worker w.
  void phase(unsigned w) noexcept {
    Worker& self = workers_[w];
    try {
      if (superstep_ == 0) {
        auto [b, e] = even_slice(vertex_count_, config_.workers, w);
        for (auto v = static_cast<VertexId>(b); v < e; ++v) execute(v, w);
      } else if (bypass()) {
        for (VertexId v : frontier_.slice(w)) {
          if (pull()) gather(v, self);
          execute(v, w);
        }
      } else if (pull()) {
        auto [b, e] = even_slice(vertex_count_, config_.workers, w);
        self.counters.status_checks += e - b;
        for (auto v = static_cast<VertexId>(b); v < e; ++v) {
          bool has_message = gather(v, self);
          if (!halted_[v] || has_message) execute(v, w);
        }
      } else {
        auto [b, e] = even_slice(vertex_count_, config_.workers, w);
        self.counters.status_checks += e - b;
        scan_push(static_cast<VertexId>(b), static_cast<VertexId>(e), w);
      }
    } catch (...) {
      self.error = std::current_exception();
    }
  }

  // Naive push-mode selection over [b, e): run v iff !halted or message
  // present. Eight flags are tested per word to skip idle stretches.
  void scan_push(VertexId b, VertexId e, unsigned w) {
    const std::uint8_t* halted = halted_.data();
    const std::uint8_t* present = mailbox_current().present.data();
    constexpr std::uint64_t kLow = 0x0101010101010101ULL;
    VertexId v = b;
    for (; v + 8 <= e; v += 8) {
      std::uint64_t h, p;
      std::memcpy(&h, halted + v, 8);
      std::memcpy(&p, present + v, 8);
      if (((~h | p) & kLow) == 0) continue;
      for (VertexId u = v; u < v + 8; ++u)
        if (!halted[u] || present[u]) execute(u, w);
    }
    for (; v < e; ++v)
      if (!halted[v] || present[v]) execute(v, w);
  }

  // Pull-mode delivery: combine the current outboxes of v's in-neighbours
  // into v's current mailbox. Reads shared state only.
  bool gather(VertexId v, Worker& self) {
    const Slots& out = outbox_current();
    bool have = false;
    Message acc{};
    for (VertexId u : graph_.in_neighbours(v)) {
      if (!out.present[u]) continue;
      if (have) {
        program_.combine(acc, out.payload[u]);
        ++self.counters.combines_applied;
      } else {
        acc = out.payload[u];
        have = true;
      }
    }
    self.counters.outbox_scans += graph_.in_degree(v);
    if (have) {
      Slots& mine = mailbox_current();
      mine.payload[v] = std::move(acc);
      mine.present[v] = 1;
    }
    return have;
  }

  void execute(VertexId v, unsigned w) {
    Worker& self = workers_[w];
    halted_[v] = 0;
    Context<P> ctx(*this, w, v);
    program_.compute(ctx);
    ++self.counters.vertices_computed;
    if (halted_[v])
      ++self.counters.halt_votes;
    else
      ++self.still_active;
    mailbox_current().present[v] = 0;
    if (config_.record_run_sets) self.ran.push_back(v);
  }

  void send(VertexId dst, const Message& msg, unsigned w) {
    Worker& self = workers_[w];
    Slots& next = mailbox_next();
    SpinLock& lock = locks_[dst];
    lock.lock();
    if (next.present[dst]) {
      program_.combine(next.payload[dst], msg);
      ++self.counters.combines_applied;
    } else {
      next.payload[dst] = msg;
      next.present[dst] = 1;
      ++self.activations;
      if (bypass()) frontier_.append(w, dst);
      if (config_.record_run_sets) self.activated.push_back(dst);
    }
    lock.unlock();
    ++self.counters.exclusion_acquisitions;
    ++self.counters.messages_sent;
  }

  void checked_send(VertexId dst, const Message& msg, unsigned w) {
    if (pull())
      throw ContractViolation("send() requires push delivery; use broadcast()");
    if (dst >= vertex_count_)
      throw std::out_of_range("send() to vertex " + std::to_string(dst) +
                              " outside [0, " + std::to_string(vertex_count_) + ")");
    send(dst, msg, w);
  }

  void broadcast(VertexId v, const Message& msg, unsigned w) {
    if (!pull()) {
      for (VertexId dst : graph_.out_neighbours(v)) send(dst, msg, w);
      return;
    }
    Worker& self = workers_[w];
    Slots& next = outbox_next();
    if (next.present[v])
      throw ContractViolation("vertex " + std::to_string(v) +
                              " broadcast twice in one superstep under pull delivery");
    next.payload[v] = msg;
    next.present[v] = 1;
    ++self.counters.messages_sent;
    self.broadcasters.push_back(v);
    if (graph_.out_degree(v) > 0) ++self.activations;
    if (bypass()) {
      for (VertexId dst : graph_.out_neighbours(v))
        if (!scheduled_[dst].exchange(1, std::memory_order_relaxed))
          frontier_.append(w, dst);
    }
  }

  // Global synchronisation, executed by exactly one thread.
  void boundary() noexcept {
    try {
      close_superstep();
    } catch (...) {
      if (!failure_) failure_ = std::current_exception();
      stop_ = true;
    }
  }

  void close_superstep() {
    Counters step;
    std::uint64_t still_active = 0;
    std::uint64_t activations = 0;
    for (Worker& w : workers_) {
      step += w.counters;
      w.counters = {};
      still_active += w.still_active;
      activations += w.activations;
      w.still_active = w.activations = 0;
      if (w.error && !failure_) failure_ = w.error;
      w.error = nullptr;
    }
    report_.counters += step;
    report_.per_superstep.push_back(step);
    report_.supersteps = superstep_ + 1;
    if (config_.record_run_sets) record();

    if (failure_) {
      stop_ = true;
      return;
    }

    current_ ^= 1;

    if (pull()) {
      // The buffer about to be written still holds the writes of s-1.
      Slots& next = outbox_next();
      for (VertexId v : stale_outboxes_) next.present[v] = 0;
      stale_outboxes_.clear();
      for (Worker& w : workers_) {
        stale_outboxes_.insert(stale_outboxes_.end(), w.broadcasters.begin(),
                               w.broadcasters.end());
        w.broadcasters.clear();
      }
    }

    bool more;
    if (bypass()) {
      frontier_.merge();
      if (pull())
        for (VertexId v : frontier_.merged())
          scheduled_[v].store(0, std::memory_order_relaxed);
      more = !frontier_.merged().empty();
    } else {
      more = still_active > 0 || activations > 0;
    }

    if (!more) {
      stop_ = true;
    } else if (superstep_ + 1 >= max_supersteps_) {
      limit_hit_ = true;
      stop_ = true;
    } else {
      ++superstep_;
    }
  }

  void record() {
    std::vector<VertexId> ran, activated;
    for (Worker& w : workers_) {
      ran.insert(ran.end(), w.ran.begin(), w.ran.end());
      w.ran.clear();
      if (pull()) {
        for (VertexId b : w.broadcasters)
          for (VertexId dst : graph_.out_neighbours(b)) activated.push_back(dst);
      } else {
        activated.insert(activated.end(), w.activated.begin(), w.activated.end());
        w.activated.clear();
      }
    }
    std::sort(ran.begin(), ran.end());
    std::sort(activated.begin(), activated.end());
    activated.erase(std::unique(activated.begin(), activated.end()), activated.end());
    report_.run_sets.push_back(std::move(ran));
    report_.activated.push_back(std::move(activated));
  }

  const Graph& graph_;
  const P& program_;
  EngineConfig config_;
  VertexId vertex_count_;

  std::vector<Value> values_;
  std::vector<std::uint8_t> halted_;
  std::array<Slots, 2> mailbox_;
  std::array<Slots, 2> outbox_;
  unsigned current_ = 0;
  std::unique_ptr<SpinLock[]> locks_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> scheduled_;
  std::vector<VertexId> stale_outboxes_;

  Frontier frontier_;
  std::vector<Worker> workers_;

  std::uint64_t superstep_ = 0;
  std::uint64_t max_supersteps_ = 0;
  bool stop_ = false;
  bool limit_hit_ = false;
  std::exception_ptr failure_;
  RunReport report_;
};

}  // namespace detail

template <VertexProgram P>
std::uint64_t Context<P>::superstep() const noexcept {
  return rt_.superstep_;
}

template <VertexProgram P>
VertexId Context<P>::vertex_count() const noexcept {
  return rt_.vertex_count_;
}

template <VertexProgram P>
EdgeIndex Context<P>::out_degree() const noexcept {
  return rt_.graph_.out_degree(vertex_);
}

template <VertexProgram P>
EdgeIndex Context<P>::in_degree() const noexcept {
  return rt_.graph_.in_degree(vertex_);
}

template <VertexProgram P>
auto Context<P>::value() noexcept -> value_type& {
  return rt_.values_[vertex_];
}

template <VertexProgram P>
auto Context<P>::value() const noexcept -> const value_type& {
  return rt_.values_[vertex_];
}

template <VertexProgram P>
auto Context<P>::next_message() -> std::optional<message_type> {
  auto& box = rt_.mailbox_current();
  if (!box.present[vertex_]) return std::nullopt;
  box.present[vertex_] = 0;
  return std::move(box.payload[vertex_]);
}

template <VertexProgram P>
void Context<P>::send(VertexId dst, const message_type& msg) {
  rt_.checked_send(dst, msg, worker_);
}

template <VertexProgram P>
void Context<P>::broadcast(const message_type& msg) {
  rt_.broadcast(vertex_, msg, worker_);
}

template <VertexProgram P>
void Context<P>::vote_to_halt() noexcept {
  rt_.halted_[vertex_] = 1;
}

/// Runs `program` on `graph` until no vertex qualifies to run.
///
/// `init` seeds each vertex value before superstep 0 (value-initialised when
/// empty). Throws SuperstepLimitExceeded when the run does not quiesce within
/// config.max_supersteps, ContractViolation on program misuse, and
/// std::invalid_argument for a zero worker count.
template <VertexProgram P>
  requires ComputesWith<P>
RunResult<P> run(const Graph& graph, const P& program,
                 const std::function<typename P::value_type(VertexId)>& init,
                 const EngineConfig& config) {
  if (config.workers == 0)
    throw std::invalid_argument("engine needs at least one worker");
  detail::Runtime<P> runtime(graph, program, config);
  return runtime.run(init);
}

template <VertexProgram P>
  requires ComputesWith<P>
RunResult<P> run(const Graph& graph, const P& program, const EngineConfig& config) {
  return run(graph, program, {}, config);
}

}  // namespace vcbsp
