#include <gtest/gtest.h>

#include "dcol/error.hpp"
#include "dcol/verify.hpp"
#include "fixtures.hpp"

namespace dcol {
namespace {

struct Oracle {
  const char* name;
  Graph g;
  std::size_t clique, chromatic, edge_chromatic;
};

TEST(OracleTest, KnownValues) {
  const Oracle cases[] = {
      {"petersen", testing::petersen(), 2, 3, 4},
      {"K4", testing::complete(4), 4, 4, 3},
      {"C5", testing::cycle(5), 2, 3, 3},
      {"K_{1,5}", testing::star(5), 2, 2, 5},
      {"P4", testing::path(4), 2, 2, 2},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(brute_force_max_clique(c.g), c.clique) << c.name;
    EXPECT_EQ(brute_force_chromatic(c.g), c.chromatic) << c.name;
    EXPECT_EQ(brute_force_edge_chromatic(c.g), c.edge_chromatic) << c.name;
  }
}

TEST(OracleTest, LimitsAreEnforced) {
  EXPECT_THROW(brute_force_chromatic(testing::path(11)), LimitExceeded);
  EXPECT_THROW(brute_force_edge_chromatic(testing::path(18)), LimitExceeded);
  EXPECT_THROW(brute_force_max_clique(testing::path(65)), LimitExceeded);
}

TEST(ProperVertexTest, Examples) {
  auto tri = testing::cycle(3);
  EXPECT_TRUE(is_proper_vertex(tri, Coloring::vertex({0, 1, 2}, 3)).ok);
  auto bad = is_proper_vertex(tri, Coloring::vertex({0, 0, 1}, 3));
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0].item, *tri.edge_index(0, 1));
  EXPECT_THROW(is_proper_vertex(tri, Coloring::vertex({0, 1}, 3)), InvalidInput);
  EXPECT_THROW(is_proper_vertex(tri, Coloring::edge({0, 1, 2}, 3)), InvalidInput);
}

TEST(ProperEdgeTest, Examples) {
  auto s = testing::star(3);
  EXPECT_TRUE(is_proper_edge(s, Coloring::edge({0, 1, 2}, 3)).ok);
  auto bad = is_proper_edge(s, Coloring::edge({0, 0, 0}, 3));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.max_star, 3u);
  EXPECT_THROW(is_proper_edge(s, Coloring::edge({0, 1}, 3)), InvalidInput);
}

TEST(CountColorsTest, DistinctAndPalette) {
  auto [used, palette] = count_colors(Coloring::vertex({0, 4, 4, 2}, 5));
  EXPECT_EQ(used, 3u);
  EXPECT_EQ(palette, 5u);
  EXPECT_THROW(count_colors(Coloring::vertex({0, 5}, 5)), InvalidInput);
}

TEST(GreedyTest, WithinClassicalBounds) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto g = testing::random_graph(40, 0.15, seed);
    auto vc = greedy_vertex_coloring(g);
    EXPECT_TRUE(is_proper_vertex(g, vc).ok);
    EXPECT_LE(vc.palette, g.max_degree() + 1);
    auto ec = greedy_edge_coloring(g);
    EXPECT_TRUE(is_proper_edge(g, ec).ok);
    EXPECT_LE(ec.palette, std::max<Color>(1, 2 * g.max_degree() - 1));
  }
}

TEST(GreedyTest, NeverBeatsTheOracle) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto g = testing::random_graph(9, 0.4, seed);
    EXPECT_GE(greedy_vertex_coloring(g).distinct(), brute_force_chromatic(g));
    EXPECT_GE(brute_force_chromatic(g), brute_force_max_clique(g));
  }
}

}  // namespace
}  // namespace dcol
