#include "dcol/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dcol/arb_edge.hpp"
#include "dcol/error.hpp"
#include "dcol/line_graph.hpp"

namespace dcol {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// rng() % k keeps streams identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

std::vector<VertexId> iota_ids(std::size_t n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return ids;
}

struct Builder {
  explicit Builder(std::size_t n, std::size_t delta) : deg(n, 0), delta(delta) {}

  bool add(VertexId u, VertexId v) {
    if (u == v || deg[u] >= delta || deg[v] >= delta) return false;
    if (!seen.insert(std::minmax(u, v)).second) return false;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
    return true;
  }

  void hub(std::size_t k) {
    for (VertexId i = 1; i <= k; ++i) add(0, i);
  }

  /// Attaches i to a random earlier vertex with spare degree; false if none.
  bool attach(std::mt19937_64& rng, VertexId i) {
    const auto start = below(rng, i);
    for (VertexId j = 0; j < i; ++j)
      if (add((start + j) % i, i)) return true;
    return false;
  }

  std::vector<std::size_t> deg;
  std::size_t delta;
  std::set<std::pair<VertexId, VertexId>> seen;
  EdgeList edges;
};

Graph forest_union(std::size_t n, std::size_t delta, std::size_t forests, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Builder b(n, delta);
  b.hub(std::min(delta, n - 1));
  for (std::size_t f = 0; f < forests; ++f) {
    for (VertexId i = 1; i < n; ++i) {
      if (f == 0 && i <= delta) continue;
      if (f == 0) {
        b.attach(rng, i);
        continue;
      }
      for (int tries = 0; tries < 8; ++tries)
        if (b.add(below(rng, i), i)) break;
    }
  }
  return Graph::from_edges(iota_ids(n), b.edges);
}

}  // namespace

GenKind parse_gen_kind(const std::string& name) {
  static const std::pair<const char*, GenKind> table[] = {
      {"path", GenKind::path},         {"random", GenKind::random}, {"forest", GenKind::forest},
      {"forests", GenKind::forests},   {"grid", GenKind::grid},     {"complete", GenKind::complete},
      {"line_of", GenKind::line_of},   {"hyper_line", GenKind::hyper_line},
  };
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw InvalidInput("unknown generator '" + name + "'");
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::path: return "path";
    case GenKind::random: return "random";
    case GenKind::forest: return "forest";
    case GenKind::forests: return "forests";
    case GenKind::grid: return "grid";
    case GenKind::complete: return "complete";
    case GenKind::line_of: return "line_of";
    case GenKind::hyper_line: return "hyper_line";
  }
  return "?";
}

Graph random_bounded_degree(std::size_t n, std::size_t delta, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (delta == 0) throw InvalidInput("delta must be positive");
  std::mt19937_64 rng(seed);
  Builder b(n, delta);
  if (n > 2 * delta) b.hub(delta);
  const std::size_t tries = 4 * n * delta;
  for (std::size_t i = 0; i < tries && n > 1; ++i) b.add(below(rng, n), below(rng, n));
  return Graph::from_edges(iota_ids(n), b.edges);
}

bool is_forest(const Graph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    const auto a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Generated generate(GenKind kind, const GenParams& p) {
  if (p.n == 0 && kind != GenKind::grid) throw InvalidInput("n must be positive");
  Generated out;
  switch (kind) {
    case GenKind::path: {
      EdgeList es;
      for (VertexId i = 0; i + 1 < p.n; ++i) es.emplace_back(i, i + 1);
      out.graph = Graph::from_edges(iota_ids(p.n), es);
      break;
    }
    case GenKind::random:
      out.graph = random_bounded_degree(p.n, p.delta, p.seed);
      break;
    case GenKind::forest:
    case GenKind::forests: {
      const auto f = kind == GenKind::forest ? 1 : p.forests;
      if (p.delta == 0 || f == 0) throw InvalidInput("delta and forests must be positive");
      if (p.n <= p.delta) throw InvalidInput("forest needs n > delta");
      out.graph = forest_union(p.n, p.delta, f, p.seed);
      if (kind == GenKind::forest && !is_forest(out.graph)) throw InvariantViolation("forest generator made a cycle");
      out.arboricity_bound = f;
      break;
    }
    case GenKind::grid: {
      if (p.w == 0 || p.h == 0) throw InvalidInput("grid needs w, h >= 1");
      EdgeList es;
      for (VertexId i = 0; i < p.w; ++i)
        for (VertexId j = 0; j < p.h; ++j) {
          if (i + 1 < p.w) es.emplace_back(i * p.h + j, (i + 1) * p.h + j);
          if (j + 1 < p.h) es.emplace_back(i * p.h + j, i * p.h + j + 1);
        }
      out.graph = Graph::from_edges(iota_ids(p.w * p.h), es);
      break;
    }
    case GenKind::complete: {
      EdgeList es;
      for (VertexId i = 0; i < p.n; ++i)
        for (VertexId j = i + 1; j < p.n; ++j) es.emplace_back(i, j);
      out.graph = Graph::from_edges(iota_ids(p.n), es);
      break;
    }
    case GenKind::line_of: {
      auto [lg, cover] = line_graph(random_bounded_degree(p.n, p.delta, p.seed));
      out.graph = std::move(lg);
      out.cover = std::move(cover);
      break;
    }
    case GenKind::hyper_line: {
      if (p.rank < 2 || p.rank > p.n) throw InvalidInput("hyper_line needs 2 <= rank <= n");
      std::mt19937_64 rng(p.seed);
      std::set<std::vector<VertexId>> seen;
      Hypergraph h;
      const auto m = p.edges ? p.edges : 2 * p.n;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<VertexId> e;
        while (e.size() < p.rank) {
          const auto v = below(rng, p.n);
          if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (seen.insert(e).second) h.hyperedges.push_back(std::move(e));
      }
      auto [lg, cover] = hypergraph_line_graph(h);
      out.graph = std::move(lg);
      out.cover = std::move(cover);
      break;
    }
  }
  if (out.arboricity_bound == 0) out.arboricity_bound = std::max<std::size_t>(1, degeneracy(out.graph));
  if (kind == GenKind::path || kind == GenKind::forest) out.arboricity_bound = 1;
  return out;
}

}  // namespace dcol
