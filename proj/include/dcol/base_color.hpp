#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dcol/graph.hpp"
#include "dcol/sim.hpp"

namespace dcol {

/// Palette constant of the Linial stage: the final palette is at most
/// kLinialConstant * Delta^2 (or the input palette, if that was already smaller).
inline constexpr Color kLinialConstant = 16;

struct ColoringRun {
  Coloring coloring;
  RoundTrace trace;
};

/// One Linial round: colors are read as polynomials of degree `degree` over GF(prime).
struct LinialStep {
  std::size_t degree = 0;
  Color prime = 0;
  Color palette_after = 0;  ///< prime^2
};

/// The round-by-round plan for shrinking a palette of size `palette` on graphs of
/// maximum degree `max_degree`. Empty when no round helps.
std::vector<LinialStep> linial_schedule(Color palette, std::size_t max_degree);

/// Proper O(Delta^2) coloring starting from the vertex IDs.
ColoringRun linial_coloring(const Graph& g, const SimConfig& config = {});

/// Same, starting from any coloring proper on g (the ID-replacement case).
ColoringRun linial_coloring(const Graph& g, std::span<const Color> initial, Color initial_palette,
                            const SimConfig& config = {});

/// Basic color reduction to any target >= Delta + 1: one round per surplus color;
/// in round j the class (palette - j) recolors greedily into [0, target).
/// Throws InvalidInput for an improper input or a target below Delta + 1.
ColoringRun reduce_palette(const Graph& g, const Coloring& c, Color target,
                           const SimConfig& config = {});

/// reduce_palette down to Delta + 1. Input palette must be at least Delta + 1.
ColoringRun reduce_colors(const Graph& g, const Coloring& c, const SimConfig& config = {});

/// (Delta+1)-coloring: Linial, then basic reduction. Palette is exactly Delta + 1.
/// With `initial` the Linial stage starts from that proper coloring instead of IDs.
ColoringRun delta_plus_one(const Graph& g, const SimConfig& config = {});
ColoringRun delta_plus_one(const Graph& g, std::span<const Color> initial, Color initial_palette,
                           const SimConfig& config = {});

/// Colors of a proper base coloring used in place of IDs by later stages.
struct LocalIds {
  std::vector<Color> ids;  ///< per vertex index; distinct across every edge
  Color space = 1;         ///< ids are < space
};

/// Throws InvalidInput unless `base` is a proper vertex coloring of g.
LocalIds refresh_ids(const Graph& g, const Coloring& base);

/// Proper edge coloring with max(1, 2 Delta - 1) colors. Runs the vertex routines
/// on the line graph; each simulated round costs two rounds of g.
ColoringRun edge_coloring_2delta(const Graph& g, const SimConfig& config = {});

/// Basic reduction of an edge coloring down to `target` (>= 2 Delta - 1).
ColoringRun reduce_edge_palette(const Graph& g, const Coloring& c, Color target,
                                const SimConfig& config = {});

}  // namespace dcol
