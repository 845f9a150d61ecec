#pragma once

#include <limits>
#include <span>
#include <vector>

#include "dcol/graph.hpp"

namespace dcol::detail {

inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

enum Side : char { kNone = 0, kA = 1, kB = 2 };

/// Colors every edge between an A-vertex and a B-vertex in exactly `rounds` rounds.
/// Round i: each A-vertex offers its i-th crossing edge (ascending neighbor ID);
/// the B-endpoint gives it the smallest color below `low` that no colored edge at
/// either endpoint has. Throws InvalidInput if an A-vertex has more than `rounds`
/// crossing edges and InvariantViolation if the palette runs out.
void color_crossing(const Graph& g, std::span<const char> side, std::size_t rounds, Color low,
                    std::vector<Color>& colors, std::vector<std::vector<std::size_t>>* active = nullptr);

}  // namespace dcol::detail
