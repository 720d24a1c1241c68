#include <gtest/gtest.h>

#include <random>

#include "balancelab/colouring.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/pattern.hpp"
#include "oracle_support.hpp"

using namespace balancelab;

TEST(Construct, Examples) {
  const Colouring star = construct(Construction::star, 9);
  EXPECT_EQ(star.red_count(), 8);
  const Colouring clique = construct(Construction::clique, 4, 3);
  EXPECT_EQ(clique.red_count(), 3);
  EXPECT_EQ(clique.blue_count(), 3);
  EXPECT_EQ(construct(Construction::erdos_gallai, 13, 2).red_count(), 12);
}

TEST(Construct, RedCountFormulas) {
  for (int n = 3; n <= 16; ++n) {
    EXPECT_EQ(construct(Construction::star, n).red_count(), n - 1);
    const Colouring cyc = construct(Construction::two_factor, n);
    EXPECT_EQ(cyc.red_count(), n);
    for (int v = 0; v < n; ++v) EXPECT_EQ(cyc.red_degree(v), 2);
    for (int t = 1; t < n; ++t) {
      EXPECT_EQ(construct(Construction::clique, n, t).red_count(), choose2(t)) << n << "," << t;
      EXPECT_EQ(construct(Construction::bipartite, n, t).red_count(), t * (n - t));
      EXPECT_EQ(construct(Construction::erdos_gallai, n, t).red_count(), choose2(t - 1) + (t - 1) * (n - t + 1));
    }
  }
}

TEST(Construct, DistinguishedVerticesAreLowest) {
  const Colouring s = construct(Construction::star, 6);
  EXPECT_EQ(s.red_degree(0), 5);
  const Colouring c = construct(Construction::clique, 6, 3);
  EXPECT_TRUE(c.is_red(0, 1) && c.is_red(0, 2) && c.is_red(1, 2));
  EXPECT_FALSE(c.is_red(2, 3));
  const Colouring b = construct(Construction::bipartite, 6, 2);
  EXPECT_TRUE(b.is_red(1, 5));
  EXPECT_FALSE(b.is_red(0, 1));
  EXPECT_FALSE(b.is_red(4, 5));
}

TEST(Construct, StarHasNoTwoIndependentRedEdges) {
  for (int n = 3; n <= 16; ++n) {
    const auto edges = construct(Construction::star, n).red_graph().edges();
    for (auto a : edges)
      for (auto b : edges) {
        const bool disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        EXPECT_FALSE(disjoint);
      }
  }
}

TEST(Construct, ErdosGallaiIsMatchingFree) {
  for (int t = 2; t <= 3; ++t)
    for (int n = 2 * t; n <= 10; ++n) {
      const Graph red = construct(Construction::erdos_gallai, n, t).red_graph();
      EXPECT_FALSE(oracle::contains_subgraph(red, matching_pattern(t).graph)) << n << "," << t;
      EXPECT_TRUE(oracle::contains_subgraph(red, matching_pattern(t - 1).graph) || t == 1);
    }
}

TEST(Construct, ParameterErrors) {
  EXPECT_THROW(construct(Construction::clique, 5), invalid_argument);
  EXPECT_THROW(construct(Construction::clique, 5, 0), invalid_argument);
  EXPECT_THROW(construct(Construction::bipartite, 5, 5), invalid_argument);
  EXPECT_THROW(construct(Construction::two_factor, 2), invalid_argument);
  EXPECT_THROW(construct(Construction::star, 17), invalid_argument);
  EXPECT_THROW(construct(Construction::from_red_graph, 4), invalid_argument);
  const Graph g = Graph::from_edges(4, {{0, 3}});
  EXPECT_EQ(construct(Construction::from_red_graph, 4, std::nullopt, &g).red_count(), 1);
  EXPECT_THROW(Colouring(3, EdgeSet::single(3)), invalid_argument);
}

TEST(Construct, NamesRoundTrip) {
  for (auto c : {Construction::star, Construction::clique, Construction::bipartite, Construction::two_factor,
                 Construction::erdos_gallai, Construction::from_red_graph})
    EXPECT_EQ(parse_construction(construction_name(c)), c);
  EXPECT_FALSE(parse_construction("wheel"));
}

TEST(BalancedType, Examples) {
  EXPECT_EQ(find_balanced_type(BalancedType::A, 4), 3);
  EXPECT_EQ(find_balanced_type(BalancedType::B, 9), 3);
  EXPECT_EQ(find_balanced_type(BalancedType::A, 5), std::nullopt);
  EXPECT_EQ(find_balanced_type(BalancedType::B, 4), 1);
  EXPECT_THROW(find_balanced_type(BalancedType::A, 1), invalid_argument);
}

TEST(BalancedType, FoundTypesAreExactlyBalanced) {
  for (int n = 2; n <= 16; ++n) {
    if (auto t = find_balanced_type(BalancedType::A, n)) {
      const Colouring c = construct(Construction::clique, n, *t);
      EXPECT_EQ(c.red_count(), c.blue_count()) << n;
      for (int s = 1; s < *t; ++s) EXPECT_NE(2 * choose2(s), choose2(n));
    }
    if (auto t = find_balanced_type(BalancedType::B, n)) {
      const Colouring c = construct(Construction::bipartite, n, *t);
      EXPECT_EQ(c.red_count(), c.blue_count()) << n;
      for (int s = 1; s < *t; ++s) EXPECT_NE(2 * s * (n - s), choose2(n));
    } else {
      for (int s = 1; s < n; ++s) EXPECT_NE(2 * s * (n - s), choose2(n)) << n;
    }
  }
}

TEST(Swap, Examples) {
  const Colouring all_red(4, EdgeSet::prefix(6));
  EXPECT_EQ(all_red.swapped().red_count(), 0);
  EXPECT_EQ(construct(Construction::star, 5).swapped().red_count(), 6);
}

TEST(Swap, InvolutionPreservingMinimum) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 15;
    const Colouring c = Colouring::from_red_graph(oracle::random_graph(n, 0.3, rng));
    EXPECT_EQ(c.swapped().swapped(), c);
    EXPECT_EQ(c.swapped().min_class(), c.min_class());
    EXPECT_EQ(c.swapped().red_count(), c.blue_count());
    EXPECT_GE(c.min_class(), 0);
  }
}
