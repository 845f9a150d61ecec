#include "dcol/clique.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "dcol/error.hpp"

namespace dcol {

CliqueCover::CliqueCover(std::size_t num_vertices, std::vector<std::vector<Vertex>> cliques,
                         CoverMode mode)
    : cliques_(std::move(cliques)), membership_(num_vertices), mode_(mode) {
  for (CliqueId q = 0; q < cliques_.size(); ++q) {
    auto& c = cliques_[q];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw InvalidInput("empty clique in cover");
    max_clique_ = std::max(max_clique_, c.size());
    for (auto v : c) {
      if (v >= num_vertices) throw InvalidInput("clique member out of range");
      membership_[v].push_back(q);
    }
  }
  for (const auto& m : membership_) diversity_ = std::max(diversity_, m.size());
}

void CliqueCover::validate(const Graph& g) const {
  if (membership_.size() != g.num_vertices()) throw InvalidInput("cover size mismatch");
  std::vector<char> covered(g.num_edges(), 0);
  for (const auto& c : cliques_) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        auto e = g.edge_index(c[i], c[j]);
        if (!e) {
          throw InvalidInput("cover clique is not complete: " + std::to_string(g.id(c[i])) +
                             " and " + std::to_string(g.id(c[j])) + " are not adjacent");
        }
        covered[*e] = 1;
      }
    }
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!covered[e]) {
      throw InvalidInput("edge " + std::to_string(g.id(g.edge(e).u)) + " " +
                         std::to_string(g.id(g.edge(e).v)) + " lies in no cover clique");
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (membership_[v].empty()) {
      throw InvalidInput("vertex " + std::to_string(g.id(v)) + " lies in no cover clique");
    }
  }
}

namespace {

std::vector<Vertex> intersect(const std::vector<Vertex>& a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct BronKerbosch {
  const Graph& g;
  std::size_t cap;
  std::vector<std::vector<Vertex>> found;

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty()) {
      if (x.empty()) {
        if (found.size() >= cap) {
          throw LimitExceeded("maximal clique count exceeds cap of " + std::to_string(cap));
        }
        found.push_back(r);
      }
      return;
    }
    // Pivot: vertex of P u X with most neighbors in P.
    Vertex pivot = p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (auto u : *set) {
        auto nb = g.neighbors(u);
        std::size_t cnt = 0;
        for (auto w : p) cnt += std::binary_search(nb.begin(), nb.end(), w) ? 1 : 0;
        if (cnt > best || (cnt == best && set == &p && u == p.front())) {
          best = cnt;
          pivot = u;
        }
      }
    }
    auto pivot_nb = g.neighbors(pivot);
    std::vector<Vertex> candidates;
    std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                        std::back_inserter(candidates));
    for (auto v : candidates) {
      r.push_back(v);
      expand(r, intersect(p, g.neighbors(v)), intersect(x, g.neighbors(v)));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

}  // namespace

CliqueCover enumerate_maximal_cliques(const Graph& g, std::size_t cap) {
  BronKerbosch bk{g, cap, {}};
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  std::vector<Vertex> r;
  bk.expand(r, std::move(all), {});
  for (auto& c : bk.found) std::sort(c.begin(), c.end());
  std::sort(bk.found.begin(), bk.found.end());
  return CliqueCover(g.num_vertices(), std::move(bk.found), CoverMode::intrinsic);
}

std::vector<Vertex> elect_masters(const CliqueCover& cover) {
  std::vector<Vertex> masters;
  masters.reserve(cover.size());
  // Cliques are sorted and index order equals ID order.
  for (const auto& c : cover.cliques()) masters.push_back(c.back());
  return masters;
}

CliqueCover restrict_cover(const CliqueCover& cover, std::size_t num_vertices,
                           std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> local(num_vertices, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> cliques;
  for (const auto& c : cover.cliques()) {
    std::vector<Vertex> part;
    for (auto v : c) {
      if (local[v] != static_cast<Vertex>(-1)) part.push_back(local[v]);
    }
    if (!part.empty()) cliques.push_back(std::move(part));
  }
  return CliqueCover(sorted.size(), std::move(cliques), CoverMode::provided);
}

Connector build_vertex_connector(const Graph& g, const CliqueCover& cover, std::size_t t) {
  if (t < 2) throw InvalidInput("connector part size t must be at least 2");
  Connector conn;
  conn.t = t;
  conn.part_of.resize(g.num_vertices());
  std::vector<Edge> kept;
  for (CliqueId q = 0; q < cover.size(); ++q) {
    const auto& c = cover.clique(q);
    for (std::size_t i = 0; i < c.size(); ++i) {
      conn.part_of[c[i]].push_back({q, i / t});
      const auto block_end = std::min(c.size(), (i / t + 1) * t);
      for (std::size_t j = i + 1; j < block_end; ++j) kept.push_back({c[i], c[j]});
    }
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (const auto& e : kept) {
    if (!g.adjacent(e.u, e.v)) throw InvalidInput("cover clique is not complete in the graph");
  }
  std::vector<VertexId> ids(g.ids().begin(), g.ids().end());
  conn.derived = Graph::from_indices(std::move(ids), std::move(kept));
  const auto bound = cover.diversity() * (t - 1);
  if (conn.derived.max_degree() > bound) {
    throw InvariantViolation("connector degree " + std::to_string(conn.derived.max_degree()) +
                             " exceeds D(t-1) = " + std::to_string(bound));
  }
  return conn;
}

namespace {

struct MaxCliqueSearch {
  const Graph& g;
  std::size_t budget;
  std::size_t nodes = 0;
  std::size_t best = 0;

  void expand(std::size_t size, std::vector<Vertex> cand) {
    if (++nodes > budget) throw LimitExceeded("max clique search exceeded its node budget");
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    // Greedy coloring of the candidates bounds the clique they can still add.
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (auto v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (auto w : classes[k]) {
          if (g.adjacent(v, w)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
      order.emplace_back(k + 1, v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!order.empty()) {
      auto [bound, v] = order.back();
      order.pop_back();
      if (size + bound <= best) return;
      std::vector<Vertex> next;
      for (const auto& [_, w] : order) {
        if (g.adjacent(v, w)) next.push_back(w);
      }
      std::sort(next.begin(), next.end());
      expand(size + 1, std::move(next));
    }
  }
};

}  // namespace

std::size_t max_clique_size(const Graph& g, std::size_t node_budget) {
  MaxCliqueSearch s{g, node_budget};
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  s.expand(0, std::move(all));
  return s.best;
}

bool check_clique_decomposition(const Graph& g, const std::vector<std::vector<VertexId>>& parts,
                                std::size_t p, std::size_t q) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::size_t total = 0;
  for (const auto& part : parts) {
    for (auto id : part) {
      auto v = g.find(id);
      if (!v) throw InvalidInput("partition names unknown vertex " + std::to_string(id));
      if (seen[*v]) throw InvalidInput("vertex " + std::to_string(id) + " appears in two parts");
      seen[*v] = 1;
      ++total;
    }
  }
  if (total != g.num_vertices()) throw InvalidInput("parts do not cover every vertex");
  std::size_t nonempty = 0;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    ++nonempty;
    if (max_clique_size(induced_subgraph(g, part)) > q) return false;
  }
  return nonempty <= p;
}

}  // namespace dcol
