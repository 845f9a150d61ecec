#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dcol {

/// Externally visible vertex identifier. Arbitrary, distinct, non-negative.
using VertexId = std::uint64_t;
/// Dense internal vertex index in [0, n). Index order equals ascending ID order.
using Vertex = std::uint32_t;
using Color = std::uint64_t;

/// Undirected edge stored once with u < v (as dense indices, hence also as IDs).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Vertices are kept sorted by ID, adjacency lists are sorted, and edges are
/// numbered in lexicographic (u, v) order. Every traversal in the library goes
/// through these orders, which is what makes runs bit-reproducible.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `ids` (distinct) with the given ID pairs.
  /// Rejects self-loops, parallel edges and unknown endpoints.
  static Graph from_edges(std::vector<VertexId> ids,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// Vertex set inferred from the edge endpoints.
  static Graph from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// Builds from dense indices; `ids[i]` is the ID of index i and must be increasing.
  static Graph from_indices(std::vector<VertexId> ids, std::vector<Edge> edges);

  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  VertexId id(Vertex v) const { return ids_[v]; }
  std::span<const VertexId> ids() const { return ids_; }
  std::optional<Vertex> find(VertexId id) const;
  /// Throws InvalidInput for an unknown ID.
  Vertex index_of(VertexId id) const;

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  /// Edge indices incident on v, parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], degree(v)};
  }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  /// The endpoint of edge e that is not v.
  Vertex other(std::size_t e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> incident_;
  std::size_t max_degree_ = 0;
};

enum class ColoringKind { vertex, edge };

/// Total map from vertex indices (or edge indices) of one graph to colors.
///
/// Tuple colors produced by the recursive schemes are flattened as
/// outer * inner_palette + inner before they land here.
struct Coloring {
  ColoringKind kind = ColoringKind::vertex;
  std::vector<Color> colors;
  Color palette = 1;

  static Coloring vertex(std::vector<Color> colors, Color palette) {
    return {ColoringKind::vertex, std::move(colors), palette};
  }
  static Coloring edge(std::vector<Color> colors, Color palette) {
    return {ColoringKind::edge, std::move(colors), palette};
  }

  std::size_t size() const { return colors.size(); }
  Color operator[](std::size_t i) const { return colors[i]; }
  /// Number of distinct colors actually used.
  std::size_t distinct() const;
};

/// Hypergraph with hyperedges given as sets of vertex IDs.
struct Hypergraph {
  std::vector<std::vector<VertexId>> hyperedges;

  /// Maximum hyperedge size.
  std::size_t rank() const;
};

/// Subgraph induced by `keep` (vertex IDs). IDs are preserved.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
/// Same, by dense indices of g. Faster path used inside the algorithms.
Graph induced_subgraph_by_index(const Graph& g, std::span<const Vertex> keep);

/// Same vertex set as g, edge set restricted to `keep` (edge indices of g).
Graph edge_subgraph(const Graph& g, std::span<const std::size_t> keep);
/// Same, with edges named by ID pairs.
Graph edge_subgraph(const Graph& g, std::span<const std::pair<VertexId, VertexId>> keep);

}  // namespace dcol
