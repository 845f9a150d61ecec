#include "dcol/arb_edge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crossing.hpp"
#include "dcol/error.hpp"
#include "dcol/star_edge.hpp"
#include "dcol/verify.hpp"

namespace dcol {

using detail::kA;
using detail::kB;
using detail::kNone;
using detail::kUncolored;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Color mul(Color a, Color b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<Color>::max()) throw LimitExceeded("palette does not fit in 64 bits");
  return static_cast<Color>(p);
}

void require_edge_proper(const Graph& g, const Coloring& c, const char* what) {
  const auto v = is_proper_edge(g, c);
  if (!v.ok) throw InvariantViolation(std::string(what) + ": " + v.violations.front().reason);
  count_colors(c);
}

}  // namespace

// ---------------------------------------------------------------------------

Color arb_edge_bound(std::size_t delta, std::size_t d) {
  return std::max<Color>(1, static_cast<Color>(delta) + 5 * static_cast<Color>(d) - 1);
}

ArbEdgeResult arb_edge_coloring(const Graph& g, std::size_t a, double q, const SimConfig& sim) {
  ArbEdgeResult out;
  auto& rep = out.report;
  auto h = h_partition(g, a, q, sim);
  rep.a = a;
  rep.q = q;
  rep.d = h.d;
  rep.sets = h.size();
  const auto delta = g.max_degree();
  rep.low = h.size() > 1 ? std::max<Color>(1, delta + h.d - 1) : 0;

  std::vector<Color> colors(g.num_edges(), kUncolored);
  std::vector<RoundTrace> internal;
  for (const auto& set : h.sets) {
    const auto sub = induced_subgraph_by_index(g, set);
    if (sub.num_edges() == 0) continue;
    auto r = star_edge_coloring_4delta(sub, sim);
    rep.high = std::max(rep.high, r.coloring.palette);
    for (std::size_t e = 0; e < sub.num_edges(); ++e) {
      const auto [u, v] = sub.edge(e);
      colors[*g.edge_index(set[u], set[v])] = rep.low + r.coloring[e];
    }
    internal.push_back(std::move(r.trace));
  }
  out.trace.then(h.trace);
  out.trace.then(RoundTrace::parallel(internal), "h-sets");

  std::vector<char> side(g.num_vertices(), kNone);
  for (std::size_t i = h.size(); i-- > 1;) {
    for (auto v : h.sets[i]) side[v] = kB;
    for (auto v : h.sets[i - 1]) side[v] = kA;
    detail::color_crossing(g, side, h.d, rep.low, colors);
    for (auto v : h.sets[i - 1]) side[v] = kB;
    out.trace.add("merge", h.d);
  }
  if (std::find(colors.begin(), colors.end(), kUncolored) != colors.end()) {
    throw InvariantViolation("edge left uncolored after the merge sweep");
  }
  out.coloring = Coloring::edge(std::move(colors), std::max<Color>(1, rep.low + rep.high));
  rep.palette = out.coloring.palette;
  rep.bound = arb_edge_bound(delta, h.d);
  rep.rounds = out.trace.rounds();
  require_edge_proper(g, out.coloring, "arb-edge");
  if (rep.palette > rep.bound) throw InvariantViolation("arb-edge palette exceeds Delta + 5d - 1");
  return out;
}

// ---------------------------------------------------------------------------

OrientationConnector build_orientation_connector(const Graph& g, const Orientation& o, std::size_t in_size,
                                                 std::size_t out_size, bool bipartite) {
  if (in_size < 1 || out_size < 1) throw InvalidInput("group sizes must be positive");
  if (o.forward.size() != g.num_edges()) throw InvalidInput("orientation does not match the graph");
  OrientationConnector con;
  con.in_size = in_size;
  con.out_size = out_size;
  con.bipartite = bipartite;

  // Rank of each edge among v's in- or out-edges, in ascending neighbor ID.
  std::vector<std::size_t> tail_rank(g.num_edges()), head_rank(g.num_edges());
  std::vector<std::size_t> first(g.num_vertices()), out_groups(g.num_vertices());
  std::size_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t in = 0, out = 0;
    for (auto e : g.incident_edges(v)) {
      if (o.tail(g, e) == v) tail_rank[e] = out++;
      else head_rank[e] = in++;
    }
    const auto gi = ceil_div(in, in_size), go = ceil_div(out, out_size);
    first[v] = total;
    out_groups[v] = go;
    const auto count = bipartite ? gi + go : std::max(gi, go);
    for (std::size_t j = 0; j < count; ++j) {
      con.owner.push_back(v);
      con.incoming.push_back(bipartite && j >= go ? 1 : 0);
    }
    total += count;
  }
  auto out_virtual = [&](Vertex v, std::size_t r) { return static_cast<Vertex>(first[v] + r / out_size); };
  auto in_virtual = [&](Vertex v, std::size_t r) {
    return static_cast<Vertex>(first[v] + (bipartite ? out_groups[v] : 0) + r / in_size);
  };

  std::vector<Edge> es(g.num_edges());
  std::vector<char> forward(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto t = out_virtual(o.tail(g, e), tail_rank[e]);
    const auto h = in_virtual(o.head(g, e), head_rank[e]);
    es[e] = {std::min(t, h), std::max(t, h)};
    forward[e] = t < h;
  }
  std::vector<VertexId> ids(total);
  for (std::size_t i = 0; i < total; ++i) ids[i] = i;
  con.derived = Graph::from_indices(std::move(ids), es);
  con.edge_map.resize(g.num_edges());
  std::vector<char> dforward(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    con.edge_map[e] = *con.derived.edge_index(es[e].u, es[e].v);
    dforward[con.edge_map[e]] = forward[e];
  }
  con.orientation.forward = std::move(dforward);
  con.orientation.out_degree.assign(total, 0);
  con.orientation.in_degree.assign(total, 0);
  for (std::size_t e = 0; e < con.derived.num_edges(); ++e) {
    ++con.orientation.out_degree[con.orientation.tail(con.derived, e)];
    ++con.orientation.in_degree[con.orientation.head(con.derived, e)];
  }
  return con;
}

// ---------------------------------------------------------------------------

LittleOResult delta_plus_little_o(const Graph& g, std::size_t a, double q, const SimConfig& sim) {
  LittleOResult out;
  auto& rep = out.report;
  rep.a = a;
  rep.q = q;
  auto h = h_partition(g, a, q, sim);
  rep.d = h.d;
  const auto delta = g.max_degree();
  rep.k = std::max<std::size_t>(1, ceil_root(static_cast<double>(delta), 2));
  rep.in_size = std::max<std::size_t>(1, ceil_div(delta, rep.k));
  rep.s = std::max<std::size_t>(1, ceil_root(static_cast<double>(h.d), 2));
  const double f = (1.0 + 5.0 * q) * static_cast<double>(rep.s);
  rep.c1 = 2.0 * f;
  rep.c2 = f * f;
  rep.bound = static_cast<Color>(std::floor((static_cast<double>(rep.k) + f) * (static_cast<double>(rep.k) + f)));
  out.trace.then(h.trace);
  if (g.num_edges() == 0) {
    out.coloring = Coloring::edge({}, 1);
    rep.palette = rep.phi_palette = rep.psi_palette = 1;
    rep.rounds = out.trace.rounds();
    return out;
  }
  const auto orient = acyclic_orientation(g, h);
  const auto con = build_orientation_connector(g, orient, rep.in_size, rep.s);
  out.trace.add("orientation-connector", 1);

  auto phi = arb_edge_coloring(con.derived, rep.s, q, sim);
  rep.phi_palette = phi.coloring.palette;
  out.trace.then(phi.trace, "connector-color");

  std::vector<std::vector<std::size_t>> classes(rep.phi_palette);
  for (std::size_t e = 0; e < g.num_edges(); ++e) classes[phi.coloring[con.edge_map[e]]].push_back(e);

  std::vector<std::pair<std::size_t, Coloring>> parts;
  std::vector<RoundTrace> traces;
  rep.psi_palette = 1;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) continue;
    const auto sub = edge_subgraph(g, classes[c]);
    if (sub.max_degree() > std::max(rep.k, rep.s)) throw InvariantViolation("class degree above max(k, s)");
    auto psi = arb_edge_coloring(sub, rep.s, q, sim);
    rep.psi_palette = std::max(rep.psi_palette, psi.coloring.palette);
    traces.push_back(std::move(psi.trace));
    parts.emplace_back(c, std::move(psi.coloring));
  }
  out.trace.then(RoundTrace::parallel(traces), "classes");

  std::vector<Color> colors(g.num_edges(), 0);
  for (const auto& [c, psi] : parts) {
    for (std::size_t i = 0; i < classes[c].size(); ++i) colors[classes[c][i]] = c * rep.psi_palette + psi[i];
  }
  out.coloring = Coloring::edge(std::move(colors), mul(rep.phi_palette, rep.psi_palette));
  rep.palette = out.coloring.palette;
  rep.rounds = out.trace.rounds();
  require_edge_proper(g, out.coloring, "delta-little-o");
  if (rep.palette > rep.bound) throw InvariantViolation("palette exceeds (ceil(sqrt Delta) + (1+5q) s)^2");
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t ceil_root(double v, std::size_t x) {
  if (x == 0) throw InvalidInput("root of order 0");
  if (v <= 1.0) return 1;
  auto reaches = [&](std::uint64_t b) {
    long double p = 1;
    for (std::size_t i = 0; i < x; ++i) {
      p *= static_cast<long double>(b);
      if (p >= v) return true;
    }
    return p >= v;
  };
  std::uint64_t lo = 1, hi = static_cast<std::uint64_t>(std::ceil(v));
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (reaches(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

Color powered_bound(std::size_t delta, double a_hat, std::size_t x) {
  const Color base = ceil_root(static_cast<double>(delta), x) + ceil_root(a_hat, x) + 3;
  Color r = 1;
  for (std::size_t i = 0; i < x; ++i) r = mul(r, base);
  return r;
}

Color powered_palette(std::size_t delta, std::size_t d, std::size_t s_in, std::size_t s_out, std::size_t x) {
  if (x <= 1) return std::max<Color>(1, delta + d - 1);
  std::size_t in = delta, out = d;
  Color prod = 1;
  for (std::size_t j = 1; j < x; ++j) {
    prod = mul(prod, std::min(s_in, in) + std::min(s_out, out) - 1);
    in = ceil_div(in, s_in);
    out = ceil_div(out, s_out);
  }
  return mul(prod, in + 2 * out - 1);
}

namespace {

class Powered {
 public:
  Powered(std::size_t s_in, std::size_t s_out, std::span<const std::uint64_t> key, PoweredReport& rep)
      : s_in_(s_in), s_out_(s_out), key_(key), rep_(rep) {}

  struct Node {
    std::vector<Color> colors;
    RoundTrace trace;
  };

  Node color(const Graph& h, const Orientation& o, std::size_t in, std::size_t out, std::size_t levels,
             std::size_t leaf_delta, std::size_t depth) {
    if (o.max_in_degree() > in || o.max_out_degree() > out) {
      throw InvariantViolation("class in/out-degree above its declared bound");
    }
    if (levels == 0) return leaf(h, o, leaf_delta, out);

    const auto si = std::min(s_in_, in), so = std::min(s_out_, out);
    const Color level_palette = si + so - 1;
    if (rep_.level_palettes.size() <= depth) rep_.level_palettes.push_back(level_palette);

    const auto con = build_orientation_connector(h, o, s_in_, s_out_, true);
    std::vector<char> side(con.derived.num_vertices());
    for (Vertex v = 0; v < side.size(); ++v) side[v] = con.incoming[v] ? kB : kA;
    std::vector<Color> phi(con.derived.num_edges(), kUncolored);
    detail::color_crossing(con.derived, side, so, level_palette, phi);

    std::vector<std::vector<std::size_t>> classes(level_palette);
    for (std::size_t e = 0; e < h.num_edges(); ++e) classes[phi[con.edge_map[e]]].push_back(e);

    const auto in2 = ceil_div(in, s_in_), out2 = ceil_div(out, s_out_);
    const Color sub_palette = sub_palette_of(in2, out2, levels - 1);
    Node node;
    node.colors.assign(h.num_edges(), 0);
    std::vector<RoundTrace> traces;
    for (Color c = 0; c < level_palette; ++c) {
      const auto& edges = classes[c];
      if (edges.empty()) continue;
      const auto sub = edge_subgraph(h, edges);
      const auto sub_o = restrict_orientation(h, o, edges);
      auto child = color(sub, sub_o, in2, out2, levels - 1, in2 + out2, depth + 1);
      for (std::size_t i = 0; i < edges.size(); ++i) node.colors[edges[i]] = c * sub_palette + child.colors[i];
      traces.push_back(std::move(child.trace));
    }
    node.trace.add("orientation-connector", 1);
    node.trace.add("bipartite-merge", so);
    node.trace.then(RoundTrace::parallel(traces), "classes");
    return node;
  }

  Color sub_palette_of(std::size_t in, std::size_t out, std::size_t levels) const {
    Color prod = 1;
    for (std::size_t j = 0; j < levels; ++j) {
      prod = mul(prod, std::min(s_in_, in) + std::min(s_out_, out) - 1);
      in = ceil_div(in, s_in_);
      out = ceil_div(out, s_out_);
    }
    return mul(prod, in + 2 * out - 1);
  }

 private:
  // Sweep over the key layers from the top: each layer's out-edges all reach
  // already-finished vertices, so one merge of out-degree `out` per layer.
  Node leaf(const Graph& h, const Orientation& o, std::size_t delta, std::size_t out) {
    if (h.max_degree() > delta) throw InvariantViolation("leaf degree above its declared bound");
    const Color palette = std::max<Color>(1, delta + out - 1);
    if (rep_.leaf_palette == 0) rep_.leaf_palette = palette;
    std::vector<std::uint64_t> layers;
    for (Vertex v = 0; v < h.num_vertices(); ++v)
      if (o.out_degree[v] > 0) layers.push_back(key_[v]);
    std::sort(layers.begin(), layers.end());
    layers.erase(std::unique(layers.begin(), layers.end()), layers.end());

    Node node;
    node.colors.assign(h.num_edges(), kUncolored);
    std::vector<char> side(h.num_vertices());
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
      for (Vertex v = 0; v < h.num_vertices(); ++v) {
        side[v] = key_[v] == *it ? kA : key_[v] > *it ? kB : kNone;
      }
      detail::color_crossing(h, side, out, palette, node.colors);
    }
    node.trace.add("layer-sweep", layers.size() * out);
    return node;
  }

  std::size_t s_in_, s_out_;
  std::span<const std::uint64_t> key_;
  PoweredReport& rep_;
};

}  // namespace

PoweredResult powered_edge_coloring(const Graph& g, std::size_t a, double q, std::size_t x, const SimConfig& sim) {
  if (x < 1) throw InvalidInput("recursion depth x must be at least 1");
  PoweredResult out;
  auto& rep = out.report;
  rep.a = a;
  rep.q = q;
  rep.x = x;
  rep.a_hat = q * static_cast<double>(a);
  auto h = h_partition(g, a, q, sim);
  rep.d = h.d;
  const auto delta = g.max_degree();
  rep.bound = powered_bound(delta, rep.a_hat, x);
  out.trace.then(h.trace);
  if (g.num_edges() == 0) {
    out.coloring = Coloring::edge({}, 1);
    rep.palette = 1;
    rep.within_bound = true;
    return out;
  }

  // Layer keys: (H-set index, proper color inside the set).
  std::vector<std::uint64_t> key(g.num_vertices());
  std::vector<RoundTrace> local;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto sub = induced_subgraph_by_index(g, h.sets[i]);
    auto c = delta_plus_one(sub, sim);
    for (std::size_t j = 0; j < h.sets[i].size(); ++j) key[h.sets[i][j]] = i * (h.d + 1) + c.coloring[j];
    local.push_back(std::move(c.trace));
  }
  out.trace.then(RoundTrace::parallel(local), "layer-keys");
  const auto orient = orientation_by_key(g, key);

  rep.s_in = rep.s_out = 1;
  if (x > 1) {
    const auto r = ceil_root(static_cast<double>(delta), x), b = ceil_root(rep.a_hat, x);
    Color best = std::numeric_limits<Color>::max();
    for (std::size_t si = 1; si <= r + 3; ++si) {
      for (std::size_t so = 1; so <= b + 3; ++so) {
        const auto p = powered_palette(delta, h.d, si, so, x);
        if (p < best) {
          best = p;
          rep.s_in = si;
          rep.s_out = so;
        }
      }
    }
  }

  Powered rec(rep.s_in, rep.s_out, key, rep);
  auto node = rec.color(g, orient, delta, h.d, x - 1, delta, 0);
  out.trace.then(node.trace);
  out.coloring = Coloring::edge(std::move(node.colors), powered_palette(delta, h.d, rep.s_in, rep.s_out, x));
  rep.palette = out.coloring.palette;
  rep.within_bound = rep.palette <= rep.bound;
  rep.rounds = out.trace.rounds();
  require_edge_proper(g, out.coloring, "powered");
  return out;
}

// ---------------------------------------------------------------------------

bool eq1_holds(double delta, double a_hat, std::size_t x, double eta) {
  const double xd = static_cast<double>(x);
  const double lhs = std::pow(delta, 1.0 / xd);
  const double rhs = xd / eta * (std::pow(a_hat, 1.0 / xd) + 3.0);
  return lhs >= rhs * (1.0 - 1e-12);
}

ArbParams auto_params(std::size_t delta, std::size_t a, double epsilon, double c) {
  if (delta < 1 || a < 1) throw InvalidInput("auto_params needs Delta >= 1 and a >= 1");
  if (!(epsilon > 0)) throw InvalidInput("epsilon must be positive");
  ArbParams p;
  p.a = a;
  p.c = c;
  p.epsilon = epsilon;
  const double D = static_cast<double>(delta), A = static_cast<double>(a);
  const double log_d = std::log2(D);
  const double loglog_d = std::max(1.0, std::log2(std::max(log_d, 1e-300)));
  p.small_arboricity = A < std::pow(D, 1.0 / (4.0 * loglog_d));
  if (p.small_arboricity) {
    p.eta = 1.0 / std::max(log_d, 1.0);
    const double expo = log_d / (loglog_d + std::log2(1.0 / p.eta) + 1.0);
    p.q = std::max(2.0 + epsilon, std::exp2(expo) / A);
    p.a_hat = p.q * A;
    p.x = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::log2(p.a_hat))));
  } else {
    p.q = 2.0 + epsilon;
    p.a_hat = p.q * A;
    const double loglog_a = std::max(1.0, std::log2(std::max(std::log2(p.a_hat), 1e-300)));
    p.x = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::log2(p.a_hat) / (c * loglog_a))));
    const double xd = static_cast<double>(p.x);
    p.eta = xd * (std::pow(p.a_hat, 1.0 / xd) + 3.0) / std::pow(D, 1.0 / xd);
  }
  p.guarantee = p.eta <= 1.0 && eq1_holds(D, p.a_hat, p.x, p.eta);
  return p;
}

}  // namespace dcol
