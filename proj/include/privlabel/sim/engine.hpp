#pragma once

// Synchronous LOCAL-model round engine.
//
// One iteration of the engine is one synchronous round: every non-halted
// node runs `step` on the messages delivered at the end of the previous
// round, fills its outbox, and then all outboxes are delivered at once.
// Node steps inside an iteration are independent, so the parallel policy
// runs them under OpenMP; the serial policy is the reference and both
// produce identical reports.

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "privlabel/graph.hpp"
#include "privlabel/random_stream.hpp"

namespace privlabel::sim {

enum class Execution { serial, parallel };

struct RunOptions {
  std::uint64_t seed = 0;
  /// Cap on communication rounds. The engine allows one extra iteration
  /// for the purely local step that follows the last exchange.
  std::size_t max_rounds = 1000;
  Execution execution = Execution::parallel;
  bool record_transcript = false;
  bool measure_wall_time = false;
};

template <class Payload>
struct Message {
  VertexId from;
  Payload payload;
};

/// Messages a node emits in one round. `broadcast` goes to every neighbor;
/// `send` targets a single neighbor. Message size is unrestricted.
template <class Payload>
class Outbox {
 public:
  Outbox() = default;

  void broadcast(Payload p) { broadcast_.push_back(std::move(p)); }

  void send(VertexId to, Payload p) {
    if (!std::binary_search(neighbors_.begin(), neighbors_.end(), to)) {
      throw std::logic_error("node " + std::to_string(self_) + " sent to non-neighbor " + std::to_string(to));
    }
    direct_.emplace_back(to, std::move(p));
  }

  bool empty() const { return broadcast_.empty() && direct_.empty(); }

 private:
  template <class P>
  friend class Engine;

  void reset(VertexId self, std::span<const VertexId> neighbors) {
    self_ = self;
    neighbors_ = neighbors;
    broadcast_.clear();
    direct_.clear();
  }
  void seal() {
    std::stable_sort(direct_.begin(), direct_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  VertexId self_ = 0;
  std::span<const VertexId> neighbors_;
  std::vector<Payload> broadcast_;
  std::vector<std::pair<VertexId, Payload>> direct_;
};

/// What a node can see: its own ID, its incident edges, global parameters
/// (n, degree bound) and its private randomness stream.
struct NodeContext {
  VertexId id;
  std::span<const VertexId> neighbors;
  std::span<const EdgeId> incident_edges;
  std::size_t n;
  std::size_t max_degree;
  std::size_t iteration;
  RandomStream& rng;
};

struct TranscriptEntry {
  std::size_t iteration;
  VertexId from;
  VertexId to;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

/// Round and message accounting shared by every algorithm run.
///
/// `rounds` is the index of the last iteration in which any message was
/// sent: local computation after the final exchange is not metered, and
/// neither are trailing idle iterations.
struct RunStats {
  std::size_t rounds = 0;
  std::size_t iterations = 0;
  std::uint64_t messages_total = 0;
  bool complete = true;
  std::uint64_t seed = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

template <class Output>
struct RunReport {
  RunStats stats;
  std::vector<Output> outputs;
  std::vector<TranscriptEntry> transcript;
  std::optional<double> wall_seconds;
};

template <class P>
concept NodeProgram = requires(const P& prog, typename P::State& state, NodeContext& ctx,
                               std::span<const Message<typename P::Payload>> inbox,
                               Outbox<typename P::Payload>& outbox) {
  typename P::State;
  typename P::Payload;
  typename P::Output;
  { prog.init(ctx) } -> std::same_as<typename P::State>;
  { prog.step(state, ctx, inbox, outbox) } -> std::same_as<bool>;
  { prog.output(std::as_const(state)) } -> std::convertible_to<typename P::Output>;
};

/// Programs whose nodes can report that, absent new messages, they will
/// never send again or change their output. If an iteration delivers no
/// messages and every live node is quiescent, the run has reached a fixed
/// point and stops as complete.
template <class P>
concept QuiescentProgram = NodeProgram<P> && requires(const P& prog, const typename P::State& state) {
  { prog.quiescent(state) } -> std::same_as<bool>;
};

template <class Payload>
class Engine {
 public:
  template <NodeProgram P>
    requires std::same_as<typename P::Payload, Payload>
  static RunReport<typename P::Output> run(const P& program, const Graph& g, std::size_t degree_bound,
                                           const RunOptions& opt) {
    using State = typename P::State;
    const std::size_t n = g.vertex_count();
    const bool parallel = opt.execution == Execution::parallel;
    const auto started = std::chrono::steady_clock::now();

    RunReport<typename P::Output> report;
    report.stats.seed = opt.seed;

    std::vector<RandomStream> rng;
    rng.reserve(n);
    for (std::size_t v = 0; v < n; ++v) rng.emplace_back(opt.seed, v);

    std::vector<std::optional<State>> state(n);
    std::vector<char> halted(n, 0);
    std::vector<Outbox<Payload>> outbox(n);
    std::vector<std::vector<Message<Payload>>> inbox(n);
    std::exception_ptr failure;

    auto context = [&](std::size_t v, std::size_t iteration) {
      const auto id = static_cast<VertexId>(v);
      return NodeContext{id, g.neighbors(id), g.incident_edges(id), n, degree_bound, iteration, rng[v]};
    };

    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (std::int64_t i = 0; i < sn; ++i) {
      try {
        NodeContext ctx = context(static_cast<std::size_t>(i), 0);
        state[i].emplace(program.init(ctx));
      } catch (...) {
#pragma omp critical(privlabel_engine_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    bool all_halted = n == 0;
    for (std::size_t iteration = 1; !all_halted; ++iteration) {
      if (iteration > opt.max_rounds + 1) {
        report.stats.complete = false;
        break;
      }
      report.stats.iterations = iteration;

#pragma omp parallel for schedule(dynamic, 256) if (parallel)
      for (std::int64_t i = 0; i < sn; ++i) {
        const auto v = static_cast<std::size_t>(i);
        outbox[v].reset(static_cast<VertexId>(v), g.neighbors(static_cast<VertexId>(v)));
        if (halted[v]) continue;
        try {
          NodeContext ctx = context(v, iteration);
          const bool done = program.step(*state[v], ctx, std::span<const Message<Payload>>(inbox[v]), outbox[v]);
          outbox[v].seal();
          halted[v] = done ? 1 : 0;
        } catch (...) {
#pragma omp critical(privlabel_engine_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);

      // Pull-based delivery: each receiver scans its neighbors in ID order,
      // so inbox order is deterministic regardless of the policy.
      std::uint64_t delivered = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : delivered) if (parallel && !opt.record_transcript)
      for (std::int64_t i = 0; i < sn; ++i) {
        const auto v = static_cast<VertexId>(i);
        auto& box = inbox[v];
        box.clear();
        for (VertexId u : g.neighbors(v)) {
          const auto& src = outbox[u];
          for (const Payload& p : src.broadcast_) box.push_back({u, p});
          auto lo = std::lower_bound(src.direct_.begin(), src.direct_.end(), v,
                                     [](const auto& item, VertexId key) { return item.first < key; });
          for (; lo != src.direct_.end() && lo->first == v; ++lo) box.push_back({u, lo->second});
        }
        delivered += box.size();
        if (opt.record_transcript) {
          for (const auto& msg : box) report.transcript.push_back({iteration, msg.from, v});
        }
      }
      report.stats.messages_total += delivered;
      if (delivered > 0) report.stats.rounds = iteration;

      all_halted = std::all_of(halted.begin(), halted.end(), [](char h) { return h != 0; });
      if constexpr (QuiescentProgram<P>) {
        if (!all_halted && delivered == 0) {
          bool fixed_point = true;
          for (std::size_t v = 0; v < n && fixed_point; ++v) {
            if (!halted[v] && !program.quiescent(*state[v])) fixed_point = false;
          }
          if (fixed_point) break;
        }
      }
    }

    report.outputs.reserve(n);
    for (std::size_t v = 0; v < n; ++v) report.outputs.push_back(program.output(*state[v]));
    if (opt.measure_wall_time) {
      report.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    return report;
  }
};

/// Runs `program` on every vertex of g in lock-step rounds until all nodes
/// halt, the run reaches a quiescent fixed point, or max_rounds is
/// exhausted (report flagged incomplete). `degree_bound` is the globally
/// known Delta; it defaults to g.max_degree().
template <NodeProgram P>
RunReport<typename P::Output> run_sync(const P& program, const Graph& g, const RunOptions& opt,
                                       std::optional<std::size_t> degree_bound = std::nullopt) {
  return Engine<typename P::Payload>::run(program, g, degree_bound.value_or(g.max_degree()), opt);
}

}  // namespace privlabel::sim
