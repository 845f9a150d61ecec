#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcol/error.hpp"
#include "dcol/graph.hpp"

namespace dcol {

/// Round count of a (possibly composite) run, broken down by phase.
/// Invariant: rounds() == sum of phase rounds.
class RoundTrace {
 public:
  struct Phase {
    std::string label;
    std::size_t rounds = 0;
  };

  RoundTrace() = default;
  RoundTrace(std::string label, std::size_t rounds) { add(std::move(label), rounds); }

  std::size_t rounds() const { return total_; }
  std::span<const Phase> phases() const { return phases_; }

  void add(std::string label, std::size_t rounds) {
    phases_.push_back({std::move(label), rounds});
    total_ += rounds;
  }

  /// Sequential composition: appends the phases of `next`, prefixing their labels.
  void then(const RoundTrace& next, const std::string& prefix = {}) {
    for (const auto& p : next.phases_) add(prefix.empty() ? p.label : prefix + "/" + p.label, p.rounds);
  }

  /// Parallel composition: the slowest trace, first one on ties. Empty input gives 0.
  static RoundTrace parallel(std::span<const RoundTrace> traces) {
    const RoundTrace* slowest = nullptr;
    for (const auto& t : traces) {
      if (!slowest || t.rounds() > slowest->rounds()) slowest = &t;
    }
    return slowest ? *slowest : RoundTrace{};
  }

 private:
  std::vector<Phase> phases_;
  std::size_t total_ = 0;
};

/// Default cap: 10 (log2 n + Delta + 50).
inline std::size_t default_round_cap(const Graph& g) {
  const double lg = g.num_vertices() > 1 ? std::log2(static_cast<double>(g.num_vertices())) : 0.0;
  return static_cast<std::size_t>(10.0 * (std::ceil(lg) + static_cast<double>(g.max_degree()) + 50.0));
}

struct SimConfig {
  std::optional<std::size_t> round_cap;
};

template <class Message>
struct Envelope {
  Vertex from = 0;
  Message message{};
};

/// What a vertex program may see and do in one round: its own identity, its
/// neighbors, and sends along incident edges.
template <class Message>
class VertexContext {
 public:
  VertexContext(const Graph& g, Vertex self, std::vector<std::vector<Envelope<Message>>>& outbox)
      : g_(g), self_(self), outbox_(outbox) {}

  Vertex self() const { return self_; }
  VertexId id() const { return g_.id(self_); }
  std::span<const Vertex> neighbors() const { return g_.neighbors(self_); }
  VertexId id_of(Vertex v) const { return g_.id(v); }
  std::size_t degree() const { return g_.degree(self_); }
  std::size_t max_degree() const { return g_.max_degree(); }
  std::size_t num_vertices() const { return g_.num_vertices(); }

  void send(Vertex to, Message m) {
    auto nb = neighbors();
    if (!std::binary_search(nb.begin(), nb.end(), to)) {
      throw InvariantViolation("vertex " + std::to_string(id()) + " sent to non-neighbor " +
                               std::to_string(g_.id(to)));
    }
    outbox_[to].push_back({self_, std::move(m)});
  }
  void broadcast(const Message& m) {
    for (auto to : neighbors()) outbox_[to].push_back({self_, m});
  }
  void halt() { halted_ = true; }
  bool halted() const { return halted_; }

 private:
  const Graph& g_;
  Vertex self_;
  std::vector<std::vector<Envelope<Message>>>& outbox_;
  bool halted_ = false;
};

template <class Output>
struct SimResult {
  std::vector<Output> outputs;  ///< indexed by vertex
  RoundTrace trace;
};

/// Synchronous LOCAL-model execution.
///
/// `Program` must provide `Message`, `Output`, `void init(VertexContext<Message>&)`,
/// `void step(VertexContext<Message>&, std::size_t round, std::span<const Envelope<Message>>)`
/// and `Output output() const`. `make(Vertex)` builds the per-vertex program state.
///
/// init runs before any communication (round 0). Each later round delivers the
/// messages sent in the previous one, then steps every live vertex. The round
/// count is the number of such deliveries before every vertex halted. Halted
/// vertices neither send nor receive.
template <class Program, class Factory>
SimResult<typename Program::Output> run(const Graph& g, Factory&& make, const SimConfig& config = {},
                                        const std::string& label = "run") {
  using Message = typename Program::Message;
  const auto n = g.num_vertices();
  std::vector<Program> programs;
  programs.reserve(n);
  for (Vertex v = 0; v < n; ++v) programs.push_back(make(v));

  std::vector<std::vector<Envelope<Message>>> inbox(n), outbox(n);
  std::vector<char> halted(n, 0);
  std::size_t live = n;
  for (Vertex v = 0; v < n; ++v) {
    VertexContext<Message> ctx(g, v, outbox);
    programs[v].init(ctx);
    if (ctx.halted()) {
      halted[v] = 1;
      --live;
    }
  }
  const auto cap = config.round_cap.value_or(default_round_cap(g));
  std::size_t round = 0;
  while (live > 0) {
    if (round >= cap) {
      throw LimitExceeded(label + ": round budget of " + std::to_string(cap) + " exceeded with " +
                          std::to_string(live) + " live vertices");
    }
    ++round;
    std::swap(inbox, outbox);
    for (auto& box : outbox) box.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (halted[v]) continue;
      VertexContext<Message> ctx(g, v, outbox);
      programs[v].step(ctx, round, std::span<const Envelope<Message>>(inbox[v]));
      if (ctx.halted()) {
        halted[v] = 1;
        --live;
      }
    }
    // Messages addressed to vertices that halted this round are dropped.
    for (Vertex v = 0; v < n; ++v) {
      if (halted[v]) outbox[v].clear();
    }
  }
  SimResult<typename Program::Output> result;
  result.outputs.reserve(n);
  for (const auto& p : programs) result.outputs.push_back(p.output());
  result.trace.add(label, round);
  return result;
}

/// Runs independent programs on disjoint subgraphs "in parallel": outputs per
/// subgraph, and a single trace whose round count is the maximum, not the sum.
template <class Program, class Factory>
std::pair<std::vector<std::vector<typename Program::Output>>, RoundTrace> run_on_partition(
    std::span<const Graph> subgraphs, Factory&& make, const SimConfig& config = {},
    const std::string& label = "parallel") {
  std::vector<std::vector<typename Program::Output>> outputs;
  std::vector<RoundTrace> traces;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    auto res = run<Program>(
        subgraphs[i], [&](Vertex v) { return make(i, v); }, config, label);
    outputs.push_back(std::move(res.outputs));
    traces.push_back(std::move(res.trace));
  }
  return {std::move(outputs), RoundTrace::parallel(traces)};
}

}  // namespace dcol
