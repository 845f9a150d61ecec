#include <algorithm>
#include <cmath>
#include <string>

#include "dcol/arb_edge.hpp"
#include "dcol/error.hpp"

namespace dcol {

namespace {

class PeelProgram {
 public:
  using Message = char;
  using Output = std::size_t;

  explicit PeelProgram(std::size_t d) : d_(d) {}

  void init(VertexContext<Message>& ctx) { remaining_ = ctx.degree(); }

  void step(VertexContext<Message>& ctx, std::size_t round, std::span<const Envelope<Message>> inbox) {
    remaining_ -= inbox.size();
    if (remaining_ <= d_) {
      level_ = round - 1;
      ctx.broadcast(1);
      ctx.halt();
    }
  }

  Output output() const { return level_; }

 private:
  std::size_t d_;
  std::size_t remaining_ = 0;
  std::size_t level_ = 0;
};

/// Sequential peeling; returns the number of phases or throws if it stalls.
std::size_t peel_phases(const Graph& g, std::size_t d) {
  std::vector<std::size_t> rem(g.num_vertices());
  std::vector<char> gone(g.num_vertices(), 0);
  std::vector<Vertex> frontier;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    rem[v] = g.degree(v);
    if (rem[v] <= d) frontier.push_back(v);
  }
  std::size_t left = g.num_vertices(), phases = 0;
  while (!frontier.empty()) {
    ++phases;
    for (auto v : frontier) gone[v] = 1;
    left -= frontier.size();
    std::vector<Vertex> next;
    for (auto v : frontier) {
      for (auto w : g.neighbors(v)) {
        if (gone[w]) continue;
        if (rem[w]-- == d + 1) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (left > 0) {
    throw InvalidInput("H-partition stalled: " + std::to_string(left) +
                       " vertices keep more than d = " + std::to_string(d) +
                       " neighbors; the arboricity bound a is too small");
  }
  return phases;
}

}  // namespace

HPartition h_partition(const Graph& g, std::size_t a, double q, const SimConfig& sim) {
  if (!(q > 2.0)) throw InvalidInput("H-partition ratio q must exceed 2");
  if (a < 1) throw InvalidInput("arboricity bound a must be at least 1");
  HPartition h;
  h.a = a;
  h.q = q;
  h.d = static_cast<std::size_t>(std::floor(q * static_cast<double>(a)));
  const auto phases = peel_phases(g, h.d);
  SimConfig cfg = sim;
  if (!cfg.round_cap) cfg.round_cap = std::max(default_round_cap(g), phases + 1);
  auto res = run<PeelProgram>(g, [&](Vertex) { return PeelProgram(h.d); }, cfg, "h-partition");
  h.level = std::move(res.outputs);
  h.trace = std::move(res.trace);
  h.sets.assign(phases, {});
  for (Vertex v = 0; v < g.num_vertices(); ++v) h.sets[h.level[v]].push_back(v);
  return h;
}

std::size_t h_partition_bound(std::size_t n, double q) {
  if (n <= 1) return 1;
  const double l = std::log(static_cast<double>(n)) / std::log(q / 2.0);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(l - 1e-9)));
}

bool check_h_partition(const Graph& g, const HPartition& h) {
  if (h.level.size() != g.num_vertices()) return false;
  std::size_t listed = 0;
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    for (auto v : h.sets[i]) {
      if (v >= g.num_vertices() || h.level[v] != i) return false;
      ++listed;
    }
  }
  if (listed != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t later = 0;
    for (auto w : g.neighbors(v)) later += h.level[w] >= h.level[v];
    if (later > h.d) return false;
  }
  return true;
}

std::size_t degeneracy(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<std::vector<Vertex>> bucket(g.max_degree() + 1);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    bucket[deg[v]].push_back(v);
  }
  std::vector<char> gone(n, 0);
  std::size_t best = 0, low = 0;
  for (std::size_t removed = 0; removed < n;) {
    while (bucket[low].empty()) ++low;
    const auto v = bucket[low].back();
    bucket[low].pop_back();
    if (gone[v] || deg[v] != low) continue;
    gone[v] = 1;
    ++removed;
    best = std::max(best, low);
    for (auto w : g.neighbors(v)) {
      if (gone[w]) continue;
      bucket[--deg[w]].push_back(w);
      low = std::min(low, deg[w]);
    }
  }
  return best;
}

std::size_t estimate_arboricity(const Graph& g) { return std::max<std::size_t>(1, (degeneracy(g) + 1) / 2); }

std::size_t Orientation::max_out_degree() const {
  return out_degree.empty() ? 0 : *std::max_element(out_degree.begin(), out_degree.end());
}

std::size_t Orientation::max_in_degree() const {
  return in_degree.empty() ? 0 : *std::max_element(in_degree.begin(), in_degree.end());
}

namespace {

template <class Forward>
Orientation orient(const Graph& g, Forward&& forward) {
  Orientation o;
  o.forward.resize(g.num_edges());
  o.out_degree.assign(g.num_vertices(), 0);
  o.in_degree.assign(g.num_vertices(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    o.forward[e] = forward(e) ? 1 : 0;
    ++o.out_degree[o.tail(g, e)];
    ++o.in_degree[o.head(g, e)];
  }
  return o;
}

}  // namespace

Orientation acyclic_orientation(const Graph& g, const HPartition& h) {
  // Index order is ID order, so "toward the higher ID" is "toward edge(e).v".
  return orient(g, [&](std::size_t e) { return h.level[g.edge(e).u] <= h.level[g.edge(e).v]; });
}

Orientation orientation_by_key(const Graph& g, std::span<const std::uint64_t> key) {
  if (key.size() != g.num_vertices()) throw InvalidInput("one key per vertex required");
  return orient(g, [&](std::size_t e) {
    const auto [u, v] = g.edge(e);
    if (key[u] == key[v]) throw InvalidInput("orientation keys tie across an edge");
    return key[u] < key[v];
  });
}

Orientation restrict_orientation(const Graph& g, const Orientation& o, std::span<const std::size_t> edges) {
  Orientation r;
  r.out_degree.assign(g.num_vertices(), 0);
  r.in_degree.assign(g.num_vertices(), 0);
  for (auto e : edges) {
    r.forward.push_back(o.forward[e]);
    ++r.out_degree[o.tail(g, e)];
    ++r.in_degree[o.head(g, e)];
  }
  return r;
}

bool is_acyclic(const Graph& g, const Orientation& o) {
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  std::vector<std::vector<Vertex>> out(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out[o.tail(g, e)].push_back(o.head(g, e));
    ++indeg[o.head(g, e)];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == g.num_vertices();
}

}  // namespace dcol
