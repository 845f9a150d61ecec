#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcol/graph.hpp"

namespace dcol {

struct Violation {
  std::size_t item = 0;  ///< vertex index or edge index, depending on the check
  std::string reason;
};

struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;
  std::size_t colors_used = 0;
  std::optional<std::size_t> max_clique;
  std::optional<std::size_t> max_star;

  void fail(std::size_t item, std::string reason) {
    ok = false;
    violations.push_back({item, std::move(reason)});
  }
};

/// Lists every monochromatic edge. Throws InvalidInput if c is not a total vertex
/// coloring of g.
Verdict is_proper_vertex(const Graph& g, const Coloring& c);

/// Lists every vertex with two incident edges of one color. Throws InvalidInput if
/// c is not a total edge coloring of g.
Verdict is_proper_edge(const Graph& g, const Coloring& c);

/// (distinct colors used, declared palette). Throws InvalidInput if a color is
/// outside the palette.
std::pair<std::size_t, Color> count_colors(const Coloring& c);

// Exhaustive oracles for small instances. They share no code with the
// algorithms they check.
inline constexpr std::size_t kCliqueOracleMaxVertices = 64;
inline constexpr std::size_t kChromaticOracleMaxVertices = 10;
inline constexpr std::size_t kEdgeChromaticOracleMaxEdges = 16;

std::size_t brute_force_max_clique(const Graph& g);
std::size_t brute_force_chromatic(const Graph& g);
std::size_t brute_force_edge_chromatic(const Graph& g);

/// Sequential greedy baselines in ID order: at most Delta+1 and 2Delta-1 colors.
Coloring greedy_vertex_coloring(const Graph& g);
Coloring greedy_edge_coloring(const Graph& g);

}  // namespace dcol
