#include <algorithm>
#include <string>

#include "crossing.hpp"
#include "dcol/arb_edge.hpp"
#include "dcol/error.hpp"
#include "dcol/verify.hpp"

namespace dcol {

namespace detail {

void color_crossing(const Graph& g, std::span<const char> side, std::size_t rounds, Color low,
                    std::vector<Color>& colors, std::vector<std::vector<std::size_t>>* active) {
  std::vector<std::vector<std::size_t>> crossing(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (side[v] != kA) continue;
    const auto nb = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (side[nb[i]] == kB) crossing[v].push_back(inc[i]);
    }
    if (crossing[v].size() > rounds) {
      throw InvalidInput("vertex " + std::to_string(g.id(v)) + " has " + std::to_string(crossing[v].size()) +
                         " crossing edges, more than d = " + std::to_string(rounds));
    }
  }
  std::vector<char> used(low, 0);
  auto mark = [&](Vertex x, char value) {
    for (auto f : g.incident_edges(x))
      if (colors[f] < low) used[colors[f]] = value;
  };
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<std::size_t> now;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (r >= crossing[v].size()) continue;
      const auto e = crossing[v][r];
      const auto b = g.other(e, v);
      mark(v, 1);
      mark(b, 1);
      Color c = 0;
      while (c < low && used[c]) ++c;
      mark(v, 0);
      mark(b, 0);
      if (c == low) throw InvariantViolation("crossing palette of size " + std::to_string(low) + " exhausted");
      colors[e] = c;
      now.push_back(e);
    }
    if (active) active->push_back(std::move(now));
  }
}

}  // namespace detail

MergeResult merge_cross_coloring(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B,
                                 const Coloring& colA, const Coloring& colB, std::size_t d) {
  using namespace detail;
  std::vector<char> side(g.num_vertices(), kNone);
  for (auto v : A) side.at(v) = kA;
  for (auto v : B) {
    if (side.at(v) != kNone) throw InvalidInput("A and B overlap");
    side[v] = kB;
  }
  if (A.size() + B.size() != g.num_vertices()) throw InvalidInput("A and B must cover every vertex");
  for (auto v : A) {
    if (g.degree(v) > d) throw InvalidInput("A-vertex " + std::to_string(g.id(v)) + " has degree above d");
  }
  std::vector<Vertex> a_sorted(A.begin(), A.end()), b_sorted(B.begin(), B.end());
  std::sort(a_sorted.begin(), a_sorted.end());
  std::sort(b_sorted.begin(), b_sorted.end());
  const auto ga = induced_subgraph_by_index(g, a_sorted);
  const auto gb = induced_subgraph_by_index(g, b_sorted);
  if (colA.kind != ColoringKind::edge || colA.size() != ga.num_edges() || !is_proper_edge(ga, colA).ok) {
    throw InvalidInput("colA must be a proper edge coloring of G(A)");
  }
  if (colB.kind != ColoringKind::edge || colB.size() != gb.num_edges() || !is_proper_edge(gb, colB).ok) {
    throw InvalidInput("colB must be a proper edge coloring of G(B)");
  }
  count_colors(colA);
  count_colors(colB);

  MergeResult out;
  out.crossing_palette = std::max<Color>(1, g.max_degree() + d - 1);
  const Color low = std::max(gb.num_edges() ? colB.palette : 0, out.crossing_palette);
  std::vector<Color> colors(g.num_edges(), kUncolored);
  auto copy = [&](const Graph& sub, const std::vector<Vertex>& members, const Coloring& c, Color shift) {
    for (std::size_t e = 0; e < sub.num_edges(); ++e) {
      const auto [u, v] = sub.edge(e);
      colors[*g.edge_index(members[u], members[v])] = c[e] + shift;
    }
  };
  copy(gb, b_sorted, colB, 0);
  copy(ga, a_sorted, colA, low);
  color_crossing(g, side, d, out.crossing_palette, colors, &out.active);
  out.coloring = Coloring::edge(std::move(colors), low + (ga.num_edges() ? colA.palette : 0));
  out.trace.add("merge", d);
  return out;
}

}  // namespace dcol
