#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dcol/base_color.hpp"
#include "dcol/graph.hpp"
#include "dcol/sim.hpp"

namespace dcol {

inline constexpr double kDefaultEpsilon = 0.5;
inline constexpr double kDefaultQ = 2.0 + kDefaultEpsilon;

// ---------------------------------------------------------------------------
// H-partition

/// Ordered vertex sets H_1..H_l. Each vertex has at most d neighbors in its own
/// set and the later ones.
struct HPartition {
  std::vector<std::vector<Vertex>> sets;  ///< sets[i] = H_{i+1}, sorted
  std::vector<std::size_t> level;         ///< vertex -> 0-based set index
  std::size_t a = 0;
  double q = kDefaultQ;
  std::size_t d = 0;  ///< floor(q a)
  RoundTrace trace;

  std::size_t size() const { return sets.size(); }
};

/// Peeling: in phase i every remaining vertex with at most floor(q a) remaining
/// neighbors joins H_i. One round per phase. Throws InvalidInput for q <= 2 and
/// when peeling stalls (a is below the arboricity).
HPartition h_partition(const Graph& g, std::size_t a, double q = kDefaultQ, const SimConfig& sim = {});

/// Set-count bound for a correct a: max(1, ceil(log_{q/2} n)).
std::size_t h_partition_bound(std::size_t n, double q);

/// Exhaustive check of the H-partition invariant.
bool check_h_partition(const Graph& g, const HPartition& h);

std::size_t degeneracy(const Graph& g);

/// ceil(degeneracy / 2), at least 1. An estimate: it can undershoot the true
/// arboricity, though peeling with q > 2 never stalls on it.
std::size_t estimate_arboricity(const Graph& g);

// ---------------------------------------------------------------------------
// Orientations

struct Orientation {
  std::vector<char> forward;  ///< per edge: 1 if directed edge(e).u -> edge(e).v
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;

  Vertex tail(const Graph& g, std::size_t e) const { return forward[e] ? g.edge(e).u : g.edge(e).v; }
  Vertex head(const Graph& g, std::size_t e) const { return forward[e] ? g.edge(e).v : g.edge(e).u; }
  std::size_t max_out_degree() const;
  std::size_t max_in_degree() const;
};

/// Cross edges toward the later set, edges inside a set toward the higher ID.
Orientation acyclic_orientation(const Graph& g, const HPartition& h);

/// Every edge toward the endpoint with the larger key. Throws InvalidInput on ties.
Orientation orientation_by_key(const Graph& g, std::span<const std::uint64_t> key);

/// Restriction of an orientation of g to edge_subgraph(g, edges) (edges ascending).
Orientation restrict_orientation(const Graph& g, const Orientation& o, std::span<const std::size_t> edges);

bool is_acyclic(const Graph& g, const Orientation& o);

// ---------------------------------------------------------------------------
// Cross-edge merge

struct MergeResult {
  Coloring coloring;  ///< edge coloring of g
  RoundTrace trace;   ///< exactly d rounds
  std::vector<std::vector<std::size_t>> active;  ///< crossing edges colored in each round
  Color crossing_palette = 0;                    ///< Delta + d - 1
};

/// A and B partition V(g); colA colors induced_subgraph_by_index(g, A), colB the same
/// for B. Every A-vertex has degree at most d in g. Crossing edges get colors below
/// max(colB palette, Delta + d - 1); A-internal colors are shifted above that.
MergeResult merge_cross_coloring(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B,
                                 const Coloring& colA, const Coloring& colB, std::size_t d);

// ---------------------------------------------------------------------------
// Delta + O(a)

struct ArbEdgeReport {
  std::size_t a = 0;
  double q = kDefaultQ;
  std::size_t d = 0;
  std::size_t sets = 0;  ///< l
  Color low = 0;         ///< crossing range, Delta + d - 1 when l > 1
  Color high = 0;        ///< shared range of the H-set internal colorings
  Color palette = 0;
  Color bound = 0;       ///< Delta + 5d - 1
  std::size_t rounds = 0;
};

struct ArbEdgeResult {
  Coloring coloring;
  ArbEdgeReport report;
  RoundTrace trace;
};

/// Constant C in the recorded bound Delta + C a.
inline double arb_edge_constant(double q) { return 5.0 * q; }
Color arb_edge_bound(std::size_t delta, std::size_t d);

ArbEdgeResult arb_edge_coloring(const Graph& g, std::size_t a, double q = kDefaultQ, const SimConfig& sim = {});

// ---------------------------------------------------------------------------
// Orientation connector

struct OrientationConnector {
  Graph derived;
  std::vector<Vertex> owner;          ///< virtual vertex -> base vertex
  std::vector<char> incoming;         ///< bipartite form: 1 for in-virtual vertices
  std::vector<std::size_t> edge_map;  ///< base edge -> derived edge
  Orientation orientation;            ///< tail virtual -> head virtual
  std::size_t in_size = 0;
  std::size_t out_size = 0;
  bool bipartite = false;
};

/// Incoming edges of v (ascending tail ID) in groups of in_size, outgoing edges
/// (ascending head ID) in groups of out_size. Shared form: group j of either
/// kind attaches to virtual vertex v_j. Bipartite form: separate in- and
/// out-virtual vertices.
OrientationConnector build_orientation_connector(const Graph& g, const Orientation& o, std::size_t in_size,
                                                 std::size_t out_size, bool bipartite = false);

// ---------------------------------------------------------------------------
// Delta + o(Delta)

struct LittleOReport {
  std::size_t a = 0;
  double q = kDefaultQ;
  std::size_t d = 0;
  std::size_t k = 0;        ///< ceil(sqrt(Delta)) in-groups
  std::size_t in_size = 0;  ///< ceil(Delta / k)
  std::size_t s = 0;        ///< ceil(sqrt(d)), out-group size and class arboricity
  Color phi_palette = 0;
  Color psi_palette = 0;
  Color palette = 0;
  double c1 = 0;  ///< 2 (1 + 5q) s
  double c2 = 0;  ///< ((1 + 5q) s)^2
  Color bound = 0;  ///< (ceil(sqrt Delta) + (1 + 5q) s)^2, rounded down
  std::size_t rounds = 0;
};

struct LittleOResult {
  Coloring coloring;
  LittleOReport report;
  RoundTrace trace;
};

LittleOResult delta_plus_little_o(const Graph& g, std::size_t a, double q = kDefaultQ, const SimConfig& sim = {});

// ---------------------------------------------------------------------------
// Powered scheme

struct PoweredReport {
  std::size_t a = 0;
  double q = kDefaultQ;
  double a_hat = 0;
  std::size_t x = 1;
  std::size_t d = 0;
  std::size_t s_in = 0;
  std::size_t s_out = 0;
  std::vector<Color> level_palettes;
  Color leaf_palette = 0;
  Color palette = 0;
  Color bound = 0;  ///< (ceil(Delta^(1/x)) + ceil(a_hat^(1/x)) + 3)^x
  bool within_bound = false;
  std::size_t rounds = 0;
};

struct PoweredResult {
  Coloring coloring;
  PoweredReport report;
  RoundTrace trace;
};

/// Smallest b with b^x >= v.
std::uint64_t ceil_root(double v, std::size_t x);

Color powered_bound(std::size_t delta, double a_hat, std::size_t x);

/// Palette of the powered scheme for given group sizes.
Color powered_palette(std::size_t delta, std::size_t d, std::size_t s_in, std::size_t s_out, std::size_t x);

PoweredResult powered_edge_coloring(const Graph& g, std::size_t a, double q, std::size_t x,
                                    const SimConfig& sim = {});

// ---------------------------------------------------------------------------
// Parameter selection

struct ArbParams {
  std::size_t a = 1;
  double q = kDefaultQ;
  double a_hat = 0;
  std::size_t x = 1;
  double eta = 1;
  double c = 1;
  double epsilon = kDefaultEpsilon;
  bool small_arboricity = false;  ///< a < Delta^(1 / (4 loglog Delta))
  bool guarantee = false;         ///< Delta^(1/x) >= (x/eta)(a_hat^(1/x) + 3) and eta <= 1
};

bool eq1_holds(double delta, double a_hat, std::size_t x, double eta);

ArbParams auto_params(std::size_t delta, std::size_t a, double epsilon = kDefaultEpsilon, double c = 1.0);

}  // namespace dcol
