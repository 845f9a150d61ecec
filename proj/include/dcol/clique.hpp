#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dcol/graph.hpp"

namespace dcol {

using CliqueId = std::size_t;

enum class CoverMode {
  intrinsic,  ///< every maximal clique of the graph, each exactly once
  provided,   ///< supplied by the caller, e.g. the stars of a line graph
};

/// A family of cliques that jointly contain every edge of the graph.
///
/// Cliques hold dense vertex indices, sorted. `membership[v]` lists the ids of
/// the cliques containing v in increasing order.
class CliqueCover {
 public:
  CliqueCover() = default;
  CliqueCover(std::size_t num_vertices, std::vector<std::vector<Vertex>> cliques, CoverMode mode);

  std::span<const std::vector<Vertex>> cliques() const { return cliques_; }
  const std::vector<Vertex>& clique(CliqueId q) const { return cliques_[q]; }
  std::span<const CliqueId> membership(Vertex v) const { return membership_[v]; }
  std::size_t size() const { return cliques_.size(); }
  std::size_t num_vertices() const { return membership_.size(); }
  CoverMode mode() const { return mode_; }

  /// Maximum number of cliques any vertex belongs to.
  std::size_t diversity() const { return diversity_; }
  /// Maximum clique size.
  std::size_t max_clique() const { return max_clique_; }

  /// Throws InvalidInput unless every clique is complete in g, every edge lies in
  /// some clique and every vertex is covered.
  void validate(const Graph& g) const;

 private:
  std::vector<std::vector<Vertex>> cliques_;
  std::vector<std::vector<CliqueId>> membership_;
  CoverMode mode_ = CoverMode::provided;
  std::size_t diversity_ = 0;
  std::size_t max_clique_ = 0;
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// All maximal cliques (Bron-Kerbosch with pivoting), ordered lexicographically
/// by their sorted vertex lists. Isolated vertices form singleton cliques.
/// Throws LimitExceeded past `cap` cliques.
CliqueCover enumerate_maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

inline std::size_t diversity(const CliqueCover& cover) { return cover.diversity(); }

/// Master of every clique: its highest-ID member.
std::vector<Vertex> elect_masters(const CliqueCover& cover);

/// Restriction of a cover of g to the vertices in `keep` (indices of g), expressed in
/// the indices of induced_subgraph_by_index(g, keep). Empty traces are dropped.
CliqueCover restrict_cover(const CliqueCover& cover, std::size_t num_vertices,
                           std::span<const Vertex> keep);

/// Vertex connector: the edges that fall inside one size-t block of some clique.
struct Connector {
  struct Part {
    CliqueId clique;
    std::size_t index;  ///< 0-based block index inside the clique
  };

  Graph derived;                          ///< same vertex set as the base graph
  std::vector<std::vector<Part>> part_of;  ///< one entry per clique the vertex belongs to
  std::size_t t = 0;
};

/// Splits every clique (ascending ID) into consecutive blocks of t and keeps only
/// intra-block edges. Throws InvalidInput for t < 2 and InvariantViolation if the
/// connector degree exceeds D(t-1).
Connector build_vertex_connector(const Graph& g, const CliqueCover& cover, std::size_t t);

/// Exact maximum clique size (branch and bound on bitsets). Throws LimitExceeded
/// when the node budget runs out.
std::size_t max_clique_size(const Graph& g, std::size_t node_budget = 50'000'000);

/// True iff `parts` (vertex ID sets) has at most p parts and each induces a graph
/// whose largest clique has at most q vertices. Throws InvalidInput if `parts` is
/// not a partition of V(g).
bool check_clique_decomposition(const Graph& g, const std::vector<std::vector<VertexId>>& parts,
                                std::size_t p, std::size_t q);

}  // namespace dcol
