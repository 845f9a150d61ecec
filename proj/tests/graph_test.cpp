#include <gtest/gtest.h>

#include <algorithm>

#include "dcol/error.hpp"
#include "dcol/graph.hpp"
#include "dcol/line_graph.hpp"
#include "fixtures.hpp"

namespace dcol {
namespace {

using testing::EdgeList;

EdgeList id_edges(const Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(g.id(e.u), g.id(e.v));
  return out;
}

TEST(GraphTest, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Graph::from_edge_list({{5, 5}}), InvalidInput);
  EXPECT_THROW(Graph::from_edge_list({{1, 2}, {2, 1}}), InvalidInput);
  EXPECT_THROW(Graph::from_edges({1, 1}, {}), InvalidInput);
  EXPECT_THROW(Graph::from_edges({1, 2}, {{1, 3}}), InvalidInput);
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  auto g = Graph::from_edge_list({{30, 10}, {20, 10}, {30, 20}, {40, 10}});
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(g.max_degree(), 3u);
  auto v10 = g.index_of(10);
  std::vector<VertexId> nb;
  for (auto w : g.neighbors(v10)) nb.push_back(g.id(w));
  EXPECT_EQ(nb, (std::vector<VertexId>{20, 30, 40}));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (auto w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) EXPECT_EQ(g.other(inc[i], v), g.neighbors(v)[i]);
  }
}

TEST(InducedSubgraphTest, CompleteGraphPair) {
  auto sub = induced_subgraph(testing::complete(4), std::vector<VertexId>{1, 2});
  EXPECT_EQ(id_edges(sub), (EdgeList{{1, 2}}));
}

TEST(InducedSubgraphTest, EmptyKeep) {
  auto sub = induced_subgraph(testing::petersen(), std::vector<VertexId>{});
  EXPECT_EQ(sub.num_vertices(), 0u);
  EXPECT_EQ(sub.num_edges(), 0u);
}

TEST(InducedSubgraphTest, CycleSubset) {
  // C5 edges: 12 23 34 45 51; among {1,2,4} only 12 survives.
  auto sub = induced_subgraph(testing::cycle(5), std::vector<VertexId>{1, 2, 4});
  EXPECT_EQ(id_edges(sub), (EdgeList{{1, 2}}));
  EXPECT_EQ(sub.num_vertices(), 3u);
}

TEST(InducedSubgraphTest, UnknownVertexRejected) {
  EXPECT_THROW(induced_subgraph(testing::cycle(5), std::vector<VertexId>{9}), InvalidInput);
}

TEST(InducedSubgraphTest, Idempotent) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto g = testing::random_graph(20, 0.3, seed);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < 20; v += 1 + seed % 3) keep.push_back(v);
    auto once = induced_subgraph(g, keep);
    EXPECT_EQ(induced_subgraph(once, keep), once);
  }
}

TEST(EdgeSubgraphTest, Examples) {
  auto tri = testing::cycle(3);
  auto one = edge_subgraph(tri, EdgeList{{1, 2}});
  EXPECT_EQ(one.num_vertices(), 3u);
  EXPECT_EQ(one.num_edges(), 1u);

  auto s9 = testing::star(9);
  auto s3 = edge_subgraph(s9, EdgeList{{0, 1}, {0, 4}, {0, 7}});
  EXPECT_EQ(s3.max_degree(), 3u);
  EXPECT_EQ(s3.num_vertices(), 10u);

  auto g = testing::petersen();
  EXPECT_EQ(edge_subgraph(g, id_edges(g)), g);
  EXPECT_THROW(edge_subgraph(tri, EdgeList{{1, 7}}), InvalidInput);
}

// Oracle: two line vertices are adjacent iff their base edges share an endpoint.
void expect_line_graph_matches_oracle(const Graph& g, const Graph& lg) {
  ASSERT_EQ(lg.num_vertices(), g.num_edges());
  for (std::size_t a = 0; a < g.num_edges(); ++a) {
    for (std::size_t b = a + 1; b < g.num_edges(); ++b) {
      const auto ea = g.edge(a), eb = g.edge(b);
      const bool share = ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
      EXPECT_EQ(lg.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)), share);
    }
  }
}

TEST(LineGraphTest, Triangle) {
  auto g = testing::cycle(3);
  auto [lg, cover] = line_graph(g);
  expect_line_graph_matches_oracle(g, lg);
  EXPECT_EQ(lg.num_edges(), 3u);
  EXPECT_EQ(cover.size(), 3u);
  EXPECT_EQ(cover.diversity(), 2u);
  EXPECT_EQ(cover.max_clique(), 2u);
  cover.validate(lg);
}

TEST(LineGraphTest, Claw) {
  auto g = testing::star(3);
  auto [lg, cover] = line_graph(g);
  expect_line_graph_matches_oracle(g, lg);
  EXPECT_EQ(lg.num_edges(), 3u);
  ASSERT_EQ(cover.size(), 4u);
  EXPECT_EQ(cover.clique(0).size(), 3u);  // the center's star
  for (CliqueId q = 1; q < 4; ++q) EXPECT_EQ(cover.clique(q).size(), 1u);
  EXPECT_EQ(cover.diversity(), 2u);
}

TEST(LineGraphTest, PathAndErrors) {
  auto [lg, cover] = line_graph(testing::path(3));
  EXPECT_EQ(lg.num_vertices(), 2u);
  EXPECT_EQ(lg.num_edges(), 1u);
  EXPECT_THROW(line_graph(Graph::from_edges({1, 2}, {})), InvalidInput);
}

TEST(LineGraphTest, DegreeFormulaOnRandomGraphs) {
  for (unsigned seed = 0; seed < 15; ++seed) {
    auto g = testing::random_graph(18, 0.25, seed);
    if (g.num_edges() == 0) continue;
    auto [lg, cover] = line_graph(g);
    expect_line_graph_matches_oracle(g, lg);
    std::size_t expect = 0;
    for (const auto& e : g.edges()) expect = std::max(expect, g.degree(e.u) + g.degree(e.v) - 2);
    EXPECT_EQ(lg.max_degree(), expect);
    EXPECT_EQ(cover.max_clique(), g.max_degree());
    cover.validate(lg);
  }
}

TEST(HypergraphLineGraphTest, TwoTriplesShareOneVertex) {
  Hypergraph h{{{1, 2, 3}, {3, 4, 5}}};
  auto [lg, cover] = hypergraph_line_graph(h);
  EXPECT_EQ(lg.num_vertices(), 2u);
  EXPECT_EQ(lg.num_edges(), 1u);
  EXPECT_EQ(cover.diversity(), 3u);
  cover.validate(lg);
}

TEST(HypergraphLineGraphTest, DisjointAndEmpty) {
  auto [lg, cover] = hypergraph_line_graph(Hypergraph{{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}});
  EXPECT_EQ(lg.num_edges(), 0u);
  EXPECT_THROW(hypergraph_line_graph(Hypergraph{}), InvalidInput);
}

TEST(HypergraphLineGraphTest, RankTwoCoincidesWithLineGraph) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    auto g = testing::random_graph(15, 0.3, seed);
    if (g.num_edges() == 0) continue;
    Hypergraph h;
    for (const auto& e : g.edges()) h.hyperedges.push_back({g.id(e.u), g.id(e.v)});
    auto [hl, hcover] = hypergraph_line_graph(h);
    auto [lg, lcover] = line_graph(g);
    EXPECT_EQ(hl, lg);
    ASSERT_EQ(hcover.size(), lcover.size());
    for (CliqueId q = 0; q < hcover.size(); ++q) EXPECT_EQ(hcover.clique(q), lcover.clique(q));
  }
}

}  // namespace
}  // namespace dcol
