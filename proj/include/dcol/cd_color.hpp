#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dcol/base_color.hpp"
#include "dcol/clique.hpp"
#include "dcol/graph.hpp"
#include "dcol/sim.hpp"

namespace dcol {

enum class CdVariant { plain, refined };

struct RecursionParams {
  std::size_t t = 2;
  std::size_t x = 1;
  CdVariant variant = CdVariant::plain;
};

/// Below this clique size (or with diversity < 2) the refined family colors
/// directly with D(S-1)+1 colors.
inline constexpr std::size_t kRefinedSmallCliqueThreshold = 16;

struct LevelStats {
  std::size_t subgraphs = 0;     ///< nonempty color classes after this level
  std::size_t max_clique = 0;    ///< largest cover clique inside any class
  std::size_t max_degree = 0;
  std::optional<std::size_t> exact_max_clique;  ///< audit mode only
  std::optional<std::size_t> max_diversity;     ///< audit mode, intrinsic covers only
};

struct DecompositionReport {
  std::size_t diversity = 0;  ///< D of the input cover
  std::size_t max_clique = 0; ///< S of the input cover
  RecursionParams params;
  std::vector<LevelStats> levels;  ///< levels[j-1] describes level j
  Color palette = 0;
  Color bound = 0;  ///< the palette bound asserted for this run
  std::size_t rounds = 0;
  bool fallback = false;  ///< refined variant colored directly
};

struct CdResult {
  Coloring coloring;
  DecompositionReport report;
  RoundTrace trace;
};

struct CdOptions {
  bool audit = false;
  SimConfig sim;
};

/// Recursive clique-decomposition coloring with x connector levels of part size t.
/// Throws InvalidInput for t < 2, x < 1 or a cover that does not fit g.
CdResult cd_coloring(const Graph& g, const CliqueCover& cover, std::size_t t, std::size_t x,
                     const CdOptions& options = {});

/// Refined family A_x: at most D^(x+1) S colors.
CdResult refined_coloring(const Graph& g, const CliqueCover& cover, std::size_t x,
                          const CdOptions& options = {});

/// max(2, floor(S^(1/(x+1)))).
std::size_t choose_params(std::size_t S, std::size_t x);

/// floor(n^(1/k)) computed exactly.
std::uint64_t integer_root(std::uint64_t n, std::size_t k);

/// Palette of the plain scheme: gamma^x (D(ceil(S/t^x)-1)+1), gamma = D(t-1)+1.
Color cd_palette(std::size_t D, std::size_t S, std::size_t t, std::size_t x);

/// (tD)^x (S/t^x + 2) D + (tD)^x, rounded up.
Color cd_palette_bound(std::size_t D, std::size_t S, std::size_t t, std::size_t x);

}  // namespace dcol
