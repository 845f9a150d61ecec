#include "dcol/verify.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dcol/error.hpp"

namespace dcol {

Verdict is_proper_vertex(const Graph& g, const Coloring& c) {
  if (c.kind != ColoringKind::vertex) throw InvalidInput("expected a vertex coloring");
  if (c.size() != g.num_vertices()) throw InvalidInput("vertex coloring is not total");
  Verdict verdict;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (c[u] == c[v]) {
      verdict.fail(e, "edge " + std::to_string(g.id(u)) + "-" + std::to_string(g.id(v)) +
                          " has both endpoints colored " + std::to_string(c[u]));
    }
  }
  verdict.colors_used = c.distinct();
  return verdict;
}

Verdict is_proper_edge(const Graph& g, const Coloring& c) {
  if (c.kind != ColoringKind::edge) throw InvalidInput("expected an edge coloring");
  if (c.size() != g.num_edges()) throw InvalidInput("edge coloring is not total");
  Verdict verdict;
  std::size_t max_star = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Color> seen;
    for (auto e : g.incident_edges(v)) seen.push_back(c[e]);
    std::sort(seen.begin(), seen.end());
    std::size_t run = seen.empty() ? 0 : 1;
    for (std::size_t i = 1; i < seen.size(); ++i) {
      run = seen[i] == seen[i - 1] ? run + 1 : 1;
      max_star = std::max(max_star, run);
      if (seen[i] == seen[i - 1] && run == 2) {
        verdict.fail(v, "vertex " + std::to_string(g.id(v)) + " has two edges colored " +
                            std::to_string(seen[i]));
      }
    }
    if (!seen.empty()) max_star = std::max<std::size_t>(max_star, 1);
  }
  verdict.colors_used = c.distinct();
  verdict.max_star = max_star;
  return verdict;
}

std::pair<std::size_t, Color> count_colors(const Coloring& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= c.palette) {
      throw InvalidInput("item " + std::to_string(i) + " has color " + std::to_string(c[i]) +
                         " outside palette " + std::to_string(c.palette));
    }
  }
  return {c.distinct(), c.palette};
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

void grow_clique(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t& best) {
  best = std::max(best, size);
  while (candidates) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, candidates & adj[v], size + 1, best);
  }
}

bool color_vertices(const Graph& g, std::vector<int>& col, Vertex v, int k) {
  if (v == g.num_vertices()) return true;
  // Symmetry: vertex v never needs a color above the largest used so far + 1.
  int used = -1;
  for (Vertex u = 0; u < v; ++u) used = std::max(used, col[u]);
  for (int c = 0; c < std::min(k, used + 2); ++c) {
    bool ok = true;
    for (auto w : g.neighbors(v)) {
      if (w < v && col[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    col[v] = c;
    if (color_vertices(g, col, v + 1, k)) return true;
  }
  col[v] = -1;
  return false;
}

bool color_edges(const Graph& g, std::vector<int>& col, std::size_t e, int k) {
  if (e == g.num_edges()) return true;
  int used = -1;
  for (std::size_t f = 0; f < e; ++f) used = std::max(used, col[f]);
  const auto [u, v] = g.edge(e);
  for (int c = 0; c < std::min(k, used + 2); ++c) {
    bool ok = true;
    for (auto x : {u, v}) {
      for (auto f : g.incident_edges(x)) {
        if (f < e && col[f] == c) ok = false;
      }
    }
    if (!ok) continue;
    col[e] = c;
    if (color_edges(g, col, e + 1, k)) return true;
  }
  col[e] = -1;
  return false;
}

}  // namespace

std::size_t brute_force_max_clique(const Graph& g) {
  if (g.num_vertices() > kCliqueOracleMaxVertices) {
    throw LimitExceeded("clique oracle limited to " + std::to_string(kCliqueOracleMaxVertices) +
                        " vertices");
  }
  if (g.num_vertices() == 0) return 0;
  const auto adj = adjacency_masks(g);
  const Mask all = g.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
  std::size_t best = 0;
  grow_clique(adj, all, 0, best);
  return best;
}

std::size_t brute_force_chromatic(const Graph& g) {
  if (g.num_vertices() > kChromaticOracleMaxVertices) {
    throw LimitExceeded("chromatic oracle limited to " +
                        std::to_string(kChromaticOracleMaxVertices) + " vertices");
  }
  if (g.num_vertices() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(g.num_vertices(), -1);
    if (color_vertices(g, col, 0, k)) return static_cast<std::size_t>(k);
  }
}

std::size_t brute_force_edge_chromatic(const Graph& g) {
  if (g.num_edges() > kEdgeChromaticOracleMaxEdges) {
    throw LimitExceeded("edge chromatic oracle limited to " +
                        std::to_string(kEdgeChromaticOracleMaxEdges) + " edges");
  }
  if (g.num_edges() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(g.num_edges(), -1);
    if (color_edges(g, col, 0, k)) return static_cast<std::size_t>(k);
  }
}

Coloring greedy_vertex_coloring(const Graph& g) {
  std::vector<Color> col(g.num_vertices(), 0);
  Color palette = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<char> used(g.degree(v) + 1, 0);
    for (auto w : g.neighbors(v)) {
      if (w < v && col[w] <= g.degree(v)) used[col[w]] = 1;
    }
    Color c = 0;
    while (used[c]) ++c;
    col[v] = c;
    palette = std::max(palette, c + 1);
  }
  return Coloring::vertex(std::move(col), palette);
}

Coloring greedy_edge_coloring(const Graph& g) {
  std::vector<Color> col(g.num_edges(), 0);
  Color palette = 1;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    std::vector<char> used(g.degree(u) + g.degree(v), 0);
    for (auto x : {u, v}) {
      for (auto f : g.incident_edges(x)) {
        if (f < e && col[f] < used.size()) used[col[f]] = 1;
      }
    }
    Color c = 0;
    while (used[c]) ++c;
    col[e] = c;
    palette = std::max(palette, c + 1);
  }
  return Coloring::edge(std::move(col), palette);
}

}  // namespace dcol
