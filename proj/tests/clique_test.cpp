#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dcol/clique.hpp"
#include "dcol/error.hpp"
#include "fixtures.hpp"

namespace dcol {
namespace {

std::vector<std::vector<VertexId>> cliques_as_ids(const Graph& g, const CliqueCover& cover) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& c : cover.cliques()) {
    std::vector<VertexId> ids;
    for (auto v : c) ids.push_back(g.id(v));
    out.push_back(ids);
  }
  return out;
}

// Oracle: a subset is a maximal clique iff it is complete and no outside vertex
// is adjacent to all of it.
std::set<std::vector<Vertex>> subset_maximal_cliques(const Graph& g) {
  const auto n = g.num_vertices();
  std::set<std::vector<Vertex>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    bool complete = true;
    for (std::size_t i = 0; i < s.size() && complete; ++i)
      for (std::size_t j = i + 1; j < s.size() && complete; ++j) complete = g.adjacent(s[i], s[j]);
    if (!complete) continue;
    bool maximal = true;
    for (Vertex w = 0; w < n && maximal; ++w) {
      if (mask >> w & 1) continue;
      bool all = true;
      for (auto v : s) all = all && g.adjacent(v, w);
      if (all) maximal = false;
    }
    if (maximal) out.insert(s);
  }
  return out;
}

TEST(MaximalCliquesTest, CompleteGraph) {
  auto g = testing::complete(9);
  auto cover = enumerate_maximal_cliques(g);
  EXPECT_EQ(cover.size(), 1u);
  EXPECT_EQ(cover.diversity(), 1u);
  EXPECT_EQ(cover.max_clique(), 9u);
  EXPECT_EQ(cover.mode(), CoverMode::intrinsic);
}

TEST(MaximalCliquesTest, PetersenEdgesAreTheCliques) {
  auto g = testing::petersen();
  auto cover = enumerate_maximal_cliques(g);
  EXPECT_EQ(cover.size(), 15u);
  EXPECT_EQ(cover.diversity(), 3u);
  EXPECT_EQ(cover.max_clique(), 2u);
  cover.validate(g);
}

TEST(MaximalCliquesTest, PathOfFour) {
  auto g = testing::path(4);
  auto cover = enumerate_maximal_cliques(g);
  EXPECT_EQ(cliques_as_ids(g, cover), (std::vector<std::vector<VertexId>>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(cover.diversity(), 2u);
}

TEST(MaximalCliquesTest, IsolatedVertexIsASingleton) {
  auto g = Graph::from_edges({1, 2, 3}, {{1, 2}});
  auto cover = enumerate_maximal_cliques(g);
  EXPECT_EQ(cliques_as_ids(g, cover), (std::vector<std::vector<VertexId>>{{1, 2}, {3}}));
}

TEST(MaximalCliquesTest, MatchesSubsetOracle) {
  for (unsigned seed = 0; seed < 25; ++seed) {
    auto g = testing::random_graph(12 + seed % 4, 0.2 + 0.03 * (seed % 10), seed);
    auto cover = enumerate_maximal_cliques(g);
    const auto oracle = subset_maximal_cliques(g);
    std::set<std::vector<Vertex>> got(cover.cliques().begin(), cover.cliques().end());
    EXPECT_EQ(got.size(), cover.size()) << "duplicate clique, seed " << seed;
    EXPECT_EQ(got, oracle) << "seed " << seed;
    cover.validate(g);
    EXPECT_TRUE(std::is_sorted(cover.cliques().begin(), cover.cliques().end()));
  }
}

TEST(MaximalCliquesTest, CapIsEnforced) {
  EXPECT_THROW(enumerate_maximal_cliques(testing::petersen(), 10), LimitExceeded);
}

TEST(CliqueCoverTest, ValidateRejectsBadCovers) {
  auto g = testing::path(3);
  EXPECT_THROW(CliqueCover(3, {{0, 1}}, CoverMode::provided).validate(g), InvalidInput);
  EXPECT_THROW(CliqueCover(3, {{0, 1, 2}}, CoverMode::provided).validate(g), InvalidInput);
  CliqueCover(3, {{0, 1}, {1, 2}}, CoverMode::provided).validate(g);
}

TEST(ElectMastersTest, HighestIdWins) {
  auto g = Graph::from_edge_list({{3, 7}, {3, 9}, {7, 9}});
  auto cover = enumerate_maximal_cliques(g);
  auto masters = elect_masters(cover);
  ASSERT_EQ(masters.size(), 1u);
  EXPECT_EQ(g.id(masters[0]), 9u);

  auto single = Graph::from_edges({5}, {});
  EXPECT_EQ(single.id(elect_masters(enumerate_maximal_cliques(single))[0]), 5u);

  auto p4 = testing::path(4);
  std::vector<VertexId> ids;
  for (auto m : elect_masters(enumerate_maximal_cliques(p4))) ids.push_back(p4.id(m));
  EXPECT_EQ(ids, (std::vector<VertexId>{2, 3, 4}));
}

TEST(ConnectorTest, CompleteGraphSplitsIntoTriangles) {
  auto g = testing::complete(9);
  auto con = build_vertex_connector(g, enumerate_maximal_cliques(g), 3);
  EXPECT_EQ(con.derived.num_vertices(), 9u);
  EXPECT_EQ(con.derived.num_edges(), 9u);
  EXPECT_EQ(con.derived.max_degree(), 2u);
  EXPECT_TRUE(con.derived.adjacent(con.derived.index_of(1), con.derived.index_of(3)));
  EXPECT_FALSE(con.derived.adjacent(con.derived.index_of(3), con.derived.index_of(4)));
  EXPECT_EQ(con.part_of[con.derived.index_of(5)][0].index, 1u);
}

TEST(ConnectorTest, TwoCliquesSharingAVertex) {
  // Cliques {1..8} and {8..15} share vertex 8; t = 4.
  testing::EdgeList es;
  for (VertexId a = 1; a <= 8; ++a)
    for (VertexId b = a + 1; b <= 8; ++b) es.emplace_back(a, b);
  for (VertexId a = 8; a <= 15; ++a)
    for (VertexId b = a + 1; b <= 15; ++b) es.emplace_back(a, b);
  auto g = Graph::from_edge_list(es);
  auto cover = enumerate_maximal_cliques(g);
  ASSERT_EQ(cover.diversity(), 2u);
  auto con = build_vertex_connector(g, cover, 4);
  const auto v8 = con.derived.index_of(8);
  std::vector<VertexId> nb;
  for (auto w : con.derived.neighbors(v8)) nb.push_back(con.derived.id(w));
  EXPECT_EQ(nb, (std::vector<VertexId>{5, 6, 7, 9, 10, 11}));
  EXPECT_LE(con.derived.max_degree(), cover.diversity() * 3);
  EXPECT_EQ(con.part_of[v8].size(), 2u);
}

TEST(ConnectorTest, LargeBlockKeepsEverything) {
  auto g = testing::petersen();
  auto con = build_vertex_connector(g, enumerate_maximal_cliques(g), 5);
  EXPECT_EQ(con.derived, g);
  EXPECT_THROW(build_vertex_connector(g, enumerate_maximal_cliques(g), 1), InvalidInput);
}

TEST(ConnectorTest, DegreeBoundOnRandomGraphs) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    auto g = testing::random_graph(40, 0.3, seed);
    auto cover = enumerate_maximal_cliques(g);
    for (std::size_t t : {2u, 3u, 4u}) {
      auto con = build_vertex_connector(g, cover, t);
      EXPECT_LE(con.derived.max_degree(), cover.diversity() * (t - 1));
      for (const auto& e : con.derived.edges()) {
        EXPECT_TRUE(g.adjacent(g.index_of(con.derived.id(e.u)), g.index_of(con.derived.id(e.v))));
      }
    }
  }
}

TEST(RestrictCoverTest, KeepsTracesInSubgraphIndices) {
  auto g = testing::path(4);
  auto cover = enumerate_maximal_cliques(g);
  std::vector<Vertex> keep{1, 2, 3};
  auto sub = restrict_cover(cover, g.num_vertices(), keep);
  ASSERT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.clique(0), (std::vector<Vertex>{0}));
  EXPECT_EQ(sub.clique(1), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(sub.clique(2), (std::vector<Vertex>{1, 2}));
  sub.validate(induced_subgraph_by_index(g, keep));
}

TEST(MaxCliqueTest, AgreesWithEnumeration) {
  EXPECT_EQ(max_clique_size(testing::complete(7)), 7u);
  EXPECT_EQ(max_clique_size(testing::petersen()), 2u);
  EXPECT_EQ(max_clique_size(Graph::from_edges({1, 2}, {})), 1u);
  for (unsigned seed = 0; seed < 10; ++seed) {
    auto g = testing::random_graph(30, 0.4, seed);
    EXPECT_EQ(max_clique_size(g), enumerate_maximal_cliques(g).max_clique());
  }
}

TEST(CliqueDecompositionCheckTest, Examples) {
  auto k4 = testing::complete(4);
  EXPECT_TRUE(check_clique_decomposition(k4, {{1, 2}, {3, 4}}, 2, 2));
  EXPECT_FALSE(check_clique_decomposition(k4, {{1, 2, 3}, {4}}, 2, 2));
  EXPECT_FALSE(check_clique_decomposition(k4, {{1}, {2}, {3}, {4}}, 3, 1));
  EXPECT_THROW(check_clique_decomposition(k4, {{1, 2}, {2, 3, 4}}, 2, 3), InvalidInput);
  EXPECT_THROW(check_clique_decomposition(k4, {{1, 2}}, 2, 3), InvalidInput);
}

}  // namespace
}  // namespace dcol
