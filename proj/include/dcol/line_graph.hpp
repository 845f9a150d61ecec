#pragma once

#include <utility>

#include "dcol/clique.hpp"
#include "dcol/graph.hpp"

namespace dcol {

/// Line graph plus the natural cover (one clique per vertex of positive degree).
///
/// Line vertex i corresponds to edge i of g, so its ID is the lexicographic rank of
/// the (u, v) pair. Clique ids follow the original vertex order.
std::pair<Graph, CliqueCover> line_graph(const Graph& g);

/// Line graph of a hypergraph: one vertex per hyperedge (IDs = lexicographic rank of
/// the sorted member lists), adjacency iff the hyperedges intersect. The cover has
/// one clique per original vertex, so diversity equals the rank.
std::pair<Graph, CliqueCover> hypergraph_line_graph(const Hypergraph& h);

}  // namespace dcol
