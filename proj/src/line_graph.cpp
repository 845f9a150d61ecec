#include "dcol/line_graph.hpp"

#include <algorithm>

#include "dcol/error.hpp"

namespace dcol {

std::pair<Graph, CliqueCover> line_graph(const Graph& g) {
  if (g.num_edges() == 0) throw InvalidInput("line graph of an edgeless graph");
  std::vector<VertexId> ids(g.num_edges());
  for (std::size_t e = 0; e < ids.size(); ++e) ids[e] = e;
  std::vector<Edge> es;
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto star = g.incident_edges(v);
    if (star.empty()) continue;
    std::vector<Vertex> clique(star.begin(), star.end());
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) es.push_back({clique[i], clique[j]});
    }
    cliques.push_back(std::move(clique));
  }
  // Two edges share at most one endpoint, so each line edge is produced once.
  auto lg = Graph::from_indices(std::move(ids), std::move(es));
  CliqueCover cover(lg.num_vertices(), std::move(cliques), CoverMode::provided);
  return {std::move(lg), std::move(cover)};
}

std::pair<Graph, CliqueCover> hypergraph_line_graph(const Hypergraph& h) {
  if (h.hyperedges.empty()) throw InvalidInput("line graph of an empty hypergraph");
  std::vector<std::vector<VertexId>> hs = h.hyperedges;
  for (auto& e : hs) {
    std::sort(e.begin(), e.end());
    if (e.empty()) throw InvalidInput("empty hyperedge");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidInput("hyperedge repeats a vertex");
    }
  }
  std::sort(hs.begin(), hs.end());
  if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) {
    throw InvalidInput("duplicate hyperedge");
  }
  // Group hyperedge ranks by original vertex.
  std::vector<std::pair<VertexId, Vertex>> incidence;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (auto v : hs[i]) incidence.emplace_back(v, static_cast<Vertex>(i));
  }
  std::sort(incidence.begin(), incidence.end());
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < incidence.size();) {
    std::size_t j = i;
    std::vector<Vertex> clique;
    while (j < incidence.size() && incidence[j].first == incidence[i].first) {
      clique.push_back(incidence[j++].second);
    }
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) es.push_back({clique[a], clique[b]});
    }
    cliques.push_back(std::move(clique));
    i = j;
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  std::vector<VertexId> ids(hs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  auto lg = Graph::from_indices(std::move(ids), std::move(es));
  CliqueCover cover(lg.num_vertices(), std::move(cliques), CoverMode::provided);
  return {std::move(lg), std::move(cover)};
}

}  // namespace dcol
