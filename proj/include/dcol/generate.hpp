#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dcol/clique.hpp"
#include "dcol/graph.hpp"

namespace dcol {

enum class GenKind {
  path,         ///< P_n
  random,       ///< random graph with maximum degree at most delta
  forest,       ///< random forest, one hub of degree delta
  forests,      ///< union of `forests` random forests, maximum degree at most delta
  grid,         ///< w x h grid
  complete,     ///< K_n
  line_of,      ///< line graph of `random` with the star cover (D = 2)
  hyper_line,   ///< line graph of a random rank-`rank` hypergraph (D <= rank)
};

struct GenParams {
  std::size_t n = 100;
  std::size_t delta = 4;
  std::size_t forests = 1;   ///< forests kind
  std::size_t w = 10, h = 10;
  std::size_t edges = 0;     ///< hyper_line: number of hyperedges (default 2n)
  std::size_t rank = 3;      ///< hyper_line
  std::uint64_t seed = 1;
};

struct Generated {
  Graph graph;
  std::optional<CliqueCover> cover;  ///< line_of and hyper_line
  std::size_t arboricity_bound = 0;  ///< certified upper bound on a
};

GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

/// Deterministic for fixed parameters and seed. Throws InvalidInput for
/// infeasible parameters.
Generated generate(GenKind kind, const GenParams& params);

/// Random graph on n vertices with maximum degree at most delta (exactly delta
/// when n > 2 delta).
Graph random_bounded_degree(std::size_t n, std::size_t delta, std::uint64_t seed);

/// True iff g has no cycle.
bool is_forest(const Graph& g);

}  // namespace dcol
