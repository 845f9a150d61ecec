#include "dcol/star_edge.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dcol/cd_color.hpp"
#include "dcol/error.hpp"

namespace dcol {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Color direct(std::size_t delta) { return delta == 0 ? 1 : 2 * static_cast<Color>(delta) - 1; }

Color pow2_times(std::size_t e, std::size_t delta) {
  if (e >= 63) return std::numeric_limits<Color>::max();
  const unsigned __int128 v = (static_cast<unsigned __int128>(1) << e) * delta;
  return v > std::numeric_limits<Color>::max() ? std::numeric_limits<Color>::max() : static_cast<Color>(v);
}

struct Node {
  Coloring coloring;
  RoundTrace trace;
};

class StarRecursion {
 public:
  StarRecursion(std::size_t t, const SimConfig& sim, std::vector<StarLevel>& levels)
      : t_(t), sim_(sim), levels_(levels) {}

  Node color(const Graph& g, std::size_t delta, std::size_t x, std::size_t depth) {
    if (g.max_degree() > delta) throw InvariantViolation("class degree above its declared bound");
    if (x == 0 || delta <= 3) {
      auto r = edge_coloring_2delta(g, sim_);
      r.coloring.palette = direct(delta);
      return {std::move(r.coloring), std::move(r.trace)};
    }
    const auto conn = build_edge_connector(g, t_);
    auto phi = edge_coloring_2delta(conn.derived, sim_);
    const Color gamma = 2 * static_cast<Color>(t_) - 1;
    if (phi.coloring.palette > gamma) throw InvariantViolation("connector needs more than 2t-1 colors");

    std::vector<std::vector<std::size_t>> classes(gamma);
    for (std::size_t e = 0; e < g.num_edges(); ++e) classes[phi.coloring[conn.edge_map[e]]].push_back(e);

    const auto k = ceil_div(delta, t_);
    const Color sub_palette = star_edge_palette(k, t_, x - 1);
    if (levels_.size() <= depth) levels_.resize(depth + 1);
    {
      auto& lvl = levels_[depth];
      lvl.classes += static_cast<std::size_t>(
          std::count_if(classes.begin(), classes.end(), [](const auto& c) { return !c.empty(); }));
      lvl.max_star = std::max(lvl.max_star, max_star_size(g, classes));
    }

    std::vector<Color> colors(g.num_edges(), 0);
    std::vector<RoundTrace> traces;
    for (Color c = 0; c < gamma; ++c) {
      const auto& edges = classes[c];
      if (edges.empty()) continue;
      const auto sub = edge_subgraph(g, edges);
      if (sub.max_degree() > k) {
        throw InvariantViolation("class star of size " + std::to_string(sub.max_degree()) +
                                 " exceeds ceil(Delta/t) = " + std::to_string(k));
      }
      auto res = color(sub, k, x - 1, depth + 1);
      for (std::size_t i = 0; i < edges.size(); ++i) colors[edges[i]] = c * sub_palette + res.coloring[i];
      traces.push_back(std::move(res.trace));
    }

    RoundTrace tr;
    tr.then(phi.trace, "connector-color");
    tr.then(RoundTrace::parallel(traces), "classes");
    Coloring out = Coloring::edge(std::move(colors), gamma * sub_palette);
    const Color target = pow2_times(x + 1, delta);
    if (out.palette > target) {
      auto red = reduce_edge_palette(g, out, target, sim_);
      tr.then(red.trace, "trim");
      out = std::move(red.coloring);
    }
    return {std::move(out), std::move(tr)};
  }

 private:
  std::size_t t_;
  const SimConfig& sim_;
  std::vector<StarLevel>& levels_;
};

}  // namespace

EdgeConnector build_edge_connector(const Graph& g, std::size_t t) {
  if (t < 2) throw InvalidInput("edge connector part size t must be at least 2");
  EdgeConnector con;
  con.t = t;
  std::vector<std::size_t> first(g.num_vertices() + 1, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto blocks = ceil_div(g.degree(v), t);
    first[v + 1] = first[v] + blocks;
    for (std::size_t b = 1; b <= blocks; ++b) {
      con.owner.push_back(v);
      con.block.push_back(b);
    }
  }
  // Virtual vertex of v that carries its edge to the neighbor of 0-based rank r.
  auto virt = [&](Vertex v, std::size_t r) { return static_cast<Vertex>(first[v] + r / t); };

  std::vector<Edge> es(g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto inc = g.incident_edges(v);
    for (std::size_t r = 0; r < inc.size(); ++r) {
      auto& e = es[inc[r]];
      if (g.edge(inc[r]).u == v) e.u = virt(v, r);
      else e.v = virt(v, r);
    }
  }
  std::vector<VertexId> ids(con.owner.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  con.derived = Graph::from_indices(std::move(ids), es);
  con.edge_map.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) con.edge_map[e] = *con.derived.edge_index(es[e].u, es[e].v);
  if (con.derived.max_degree() > t) throw InvariantViolation("edge connector degree above t");
  return con;
}

Color star_edge_palette(std::size_t delta, std::size_t t, std::size_t x) {
  if (x == 0 || delta <= 3) return direct(delta);
  const Color gamma = 2 * static_cast<Color>(t) - 1;
  const Color sub = star_edge_palette(ceil_div(delta, t), t, x - 1);
  const unsigned __int128 combined = static_cast<unsigned __int128>(gamma) * sub;
  const Color target = pow2_times(x + 1, delta);
  return combined > target ? target : static_cast<Color>(combined);
}

StarEdgeResult recursive_star_edge_coloring(const Graph& g, std::size_t x, const SimConfig& sim) {
  if (x < 1) throw InvalidInput("recursion depth x must be at least 1");
  StarEdgeResult out;
  auto& rep = out.report;
  const auto delta = g.max_degree();
  rep.x = x;
  rep.t = std::max<std::size_t>(2, integer_root(delta, x + 1));
  rep.bound = std::max<Color>(1, pow2_times(x + 1, delta));
  if (g.num_edges() == 0) {
    out.coloring = Coloring::edge({}, 1);
    rep.palette = 1;
    return out;
  }
  StarRecursion rec(rep.t, sim, rep.levels);
  auto node = rec.color(g, delta, x, 0);
  out.coloring = std::move(node.coloring);
  out.trace = std::move(node.trace);
  rep.palette = out.coloring.palette;
  rep.rounds = out.trace.rounds();
  if (rep.palette != star_edge_palette(delta, rep.t, x)) {
    throw InvariantViolation("edge palette disagrees with its closed form");
  }
  if (rep.palette > rep.bound) throw InvariantViolation("edge palette exceeds 2^(x+1) Delta");
  return out;
}

StarEdgeResult star_edge_coloring_4delta(const Graph& g, const SimConfig& sim) {
  return recursive_star_edge_coloring(g, 1, sim);
}

std::size_t max_star_size(const Graph& g, const std::vector<std::vector<std::size_t>>& classes) {
  std::size_t best = 0;
  std::vector<std::size_t> count(g.num_vertices(), 0);
  for (const auto& cls : classes) {
    for (auto e : cls) {
      const auto [u, v] = g.edge(e);
      best = std::max({best, ++count[u], ++count[v]});
    }
    for (auto e : cls) {
      const auto [u, v] = g.edge(e);
      count[u] = count[v] = 0;
    }
  }
  return best;
}

bool check_star_partition(const Graph& g, const std::vector<std::vector<std::size_t>>& classes,
                          std::size_t p, std::size_t q) {
  std::vector<char> seen(g.num_edges(), 0);
  std::size_t total = 0;
  for (const auto& cls : classes) {
    for (auto e : cls) {
      if (e >= g.num_edges()) throw InvalidInput("edge index out of range");
      if (seen[e]) throw InvalidInput("edge " + std::to_string(e) + " appears in two classes");
      seen[e] = 1;
      ++total;
    }
  }
  if (total != g.num_edges()) throw InvalidInput("classes do not cover every edge");
  const auto nonempty = static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const auto& c) { return !c.empty(); }));
  return nonempty <= p && max_star_size(g, classes) <= q;
}

}  // namespace dcol
