#include "dcol/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "dcol/error.hpp"

namespace dcol {

Graph Graph::from_indices(std::vector<VertexId> ids, std::vector<Edge> edges) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) throw InvalidInput("vertex IDs must be strictly increasing");
  }
  const auto n = ids.size();
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(ids[e.u]));
    if (e.u >= n || e.v >= n) throw InvalidInput("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1] == edges[i]) {
      throw InvalidInput("duplicate edge " + std::to_string(ids[edges[i].u]) + " " +
                         std::to_string(ids[edges[i].v]));
    }
  }

  Graph g;
  g.ids_ = std::move(ids);
  g.edges_ = std::move(edges);

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  g.incident_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so pushing in edge order yields sorted lists for
  // the u side; the v side receives u's in increasing order as well.
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adjacency_[fill[u]] = v;
    g.incident_[fill[u]++] = e;
    g.adjacency_[fill[v]] = u;
    g.incident_[fill[v]++] = e;
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto b = g.offsets_[v], en = g.offsets_[v + 1];
    std::vector<std::pair<Vertex, std::size_t>> tmp;
    tmp.reserve(en - b);
    for (auto i = b; i < en; ++i) tmp.emplace_back(g.adjacency_[i], g.incident_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (auto i = b; i < en; ++i) {
      g.adjacency_[i] = tmp[i - b].first;
      g.incident_[i] = tmp[i - b].second;
    }
    g.max_degree_ = std::max(g.max_degree_, en - b);
  }
  return g;
}

Graph Graph::from_edges(std::vector<VertexId> ids,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InvalidInput("vertex IDs must be distinct");
  }
  auto lookup = [&](VertexId id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
      throw InvalidInput("edge references unknown vertex " + std::to_string(id));
    }
    return static_cast<Vertex>(it - ids.begin());
  };
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back({lookup(a), lookup(b)});
  return from_indices(std::move(ids), std::move(es));
}

Graph Graph::from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return from_edges(std::move(ids), edges);
}

std::optional<Vertex> Graph::find(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

Vertex Graph::index_of(VertexId id) const {
  if (auto v = find(id)) return *v;
  throw InvalidInput("unknown vertex " + std::to_string(id));
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::size_t Coloring::distinct() const {
  std::vector<Color> c(colors);
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

std::size_t Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& h : hyperedges) r = std::max(r, h.size());
  return r;
}

Graph induced_subgraph_by_index(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> local(g.num_vertices(), static_cast<Vertex>(-1));
  std::vector<VertexId> ids;
  ids.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.num_vertices()) throw InvalidInput("vertex index out of range");
    local[sorted[i]] = static_cast<Vertex>(i);
    ids.push_back(g.id(sorted[i]));
  }
  std::vector<Edge> es;
  for (auto v : sorted) {
    for (auto w : g.neighbors(v)) {
      if (w > v && local[w] != static_cast<Vertex>(-1)) es.push_back({local[v], local[w]});
    }
  }
  return Graph::from_indices(std::move(ids), std::move(es));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<Vertex> idx;
  idx.reserve(keep.size());
  for (auto id : keep) idx.push_back(g.index_of(id));
  return induced_subgraph_by_index(g, idx);
}

Graph edge_subgraph(const Graph& g, std::span<const std::size_t> keep) {
  std::vector<Edge> es;
  es.reserve(keep.size());
  for (auto e : keep) {
    if (e >= g.num_edges()) throw InvalidInput("edge index out of range");
    es.push_back(g.edge(e));
  }
  std::vector<VertexId> ids(g.ids().begin(), g.ids().end());
  return Graph::from_indices(std::move(ids), std::move(es));
}

Graph edge_subgraph(const Graph& g, std::span<const std::pair<VertexId, VertexId>> keep) {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (const auto& [a, b] : keep) {
    auto e = g.edge_index(g.index_of(a), g.index_of(b));
    if (!e) throw InvalidInput("not an edge: " + std::to_string(a) + " " + std::to_string(b));
    idx.push_back(*e);
  }
  return edge_subgraph(g, idx);
}

}  // namespace dcol
