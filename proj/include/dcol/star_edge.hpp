#pragma once

#include <cstddef>
#include <vector>

#include "dcol/base_color.hpp"
#include "dcol/graph.hpp"
#include "dcol/sim.hpp"

namespace dcol {

/// Splits every vertex v into ceil(deg(v)/t) virtual vertices. The neighbor of
/// rank l (1-based, ascending ID) is attached to virtual vertex ceil(l/t).
struct EdgeConnector {
  Graph derived;                     ///< virtual vertices, IDs 0.. in (owner, block) order
  std::vector<Vertex> owner;         ///< virtual vertex -> base vertex
  std::vector<std::size_t> block;    ///< virtual vertex -> 1-based block index
  std::vector<std::size_t> edge_map; ///< base edge index -> derived edge index
  std::size_t t = 0;
};

EdgeConnector build_edge_connector(const Graph& g, std::size_t t);

struct StarLevel {
  std::size_t classes = 0;   ///< nonempty edge classes produced at this level
  std::size_t max_star = 0;  ///< largest same-class star found at any vertex
};

struct StarPartitionReport {
  std::size_t t = 0;
  std::size_t x = 0;
  std::vector<StarLevel> levels;
  Color palette = 0;
  Color bound = 0;  ///< 2^(x+1) Delta, or 2Delta-1 when colored directly
  std::size_t rounds = 0;
};

struct StarEdgeResult {
  Coloring coloring;
  StarPartitionReport report;
  RoundTrace trace;
};

/// Closed-form palette of the recursive scheme with fixed t:
/// P(D, 0) = max(1, 2D-1), P(D, x) = min((2t-1) P(ceil(D/t), x-1), 2^(x+1) D),
/// with direct coloring whenever D <= 3.
Color star_edge_palette(std::size_t delta, std::size_t t, std::size_t x);

/// x connector levels, t = max(2, floor(Delta^(1/(x+1)))); at most 2^(x+1) Delta colors.
StarEdgeResult recursive_star_edge_coloring(const Graph& g, std::size_t x, const SimConfig& sim = {});

/// The two-stage scheme: x = 1, at most 4 Delta colors.
StarEdgeResult star_edge_coloring_4delta(const Graph& g, const SimConfig& sim = {});

/// True iff `classes` (edge indices of g) number at most p and no vertex has more
/// than q incident edges in one class. Throws InvalidInput unless the classes
/// partition E(g).
bool check_star_partition(const Graph& g, const std::vector<std::vector<std::size_t>>& classes,
                          std::size_t p, std::size_t q);

/// Largest number of same-class edges at one vertex.
std::size_t max_star_size(const Graph& g, const std::vector<std::vector<std::size_t>>& classes);

}  // namespace dcol
