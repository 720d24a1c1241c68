#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "balancelab/enumerator.hpp"
#include "oracle_support.hpp"

using namespace balancelab;

TEST(Enumerator, ClassCounts) {
  const long long expect[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_classes(n), expect[n]) << "n=" << n;
}

TEST(Enumerator, CompleteAndIsomorphFreeAgainstBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    std::set<EdgeSet> brute;
    const int m = choose2(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
      brute.insert(oracle::brute_canonical(Graph::from_edge_set(n, EdgeSet(bits, 0))));
    std::multiset<EdgeSet> yielded;
    for_each_class(n, [&](const Graph& g) { yielded.insert(oracle::brute_canonical(g)); });
    EXPECT_EQ(yielded.size(), brute.size()) << "n=" << n;
    for (const EdgeSet& k : brute) EXPECT_EQ(yielded.count(k), 1u) << "n=" << n;
  }
}

TEST(Enumerator, IsomorphFreeSampled) {
  // All of n=7 and a seeded sample of n=8, keyed by permutation minimisation.
  std::set<EdgeSet> seven;
  for_each_class(7, [&](const Graph& g) { EXPECT_TRUE(seven.insert(oracle::brute_canonical(g)).second); });
  EXPECT_EQ(seven.size(), 1044u);

  std::mt19937_64 rng(8);
  std::bernoulli_distribution pick(0.04);
  std::set<EdgeSet> eight;
  std::size_t sampled = 0;
  for_each_class(8, [&](const Graph& g) {
    if (!pick(rng)) return;
    ++sampled;
    EXPECT_TRUE(eight.insert(oracle::brute_canonical(g)).second);
  });
  EXPECT_GT(sampled, 300u);
}

TEST(Enumerator, AllCanonicalKeysDistinctAtEight) {
  std::unordered_set<CanonicalKey, CanonicalKeyHash> keys;
  for_each_class(8, [&](const Graph& g) { EXPECT_TRUE(keys.insert(canonical_form(g)).second); });
  EXPECT_EQ(keys.size(), 12346u);
}

// A second child-selection rule: extend every class on n-1 vertices by every
// neighbourhood and keep one child per canonical key.
TEST(Enumerator, AgreesWithExtendAndDeduplicate) {
  std::set<EdgeSet> seven;
  for (const Graph& g : enumerate_classes(6))
    for (unsigned s = 0; s < (1u << 6); ++s) seven.insert(oracle::brute_canonical(g.with_vertex(VertexMask(s))));
  EXPECT_EQ(seven.size(), 1044u);

  std::unordered_set<CanonicalKey, CanonicalKeyHash> eight;
  for (const Graph& g : enumerate_classes(7))
    for (unsigned s = 0; s < (1u << 7); ++s) eight.insert(canonical_form(g.with_vertex(VertexMask(s))));
  EXPECT_EQ(eight.size(), 12346u);
}

TEST(Enumerator, DeterministicOrder) {
  EXPECT_EQ(enumerate_classes(7), enumerate_classes(7));
}

TEST(Enumerator, IndependentOfWorkersAndSplitDepth) {
  const long long serial = count_classes(8, 1);
  EXPECT_EQ(count_classes(8, 2), serial);
  EXPECT_EQ(count_classes(8, 4), serial);

  std::multiset<std::vector<std::uint8_t>> reference;
  for_each_class(7, [&](const Graph& g) { reference.insert(canonical_form(g).bytes()); });
  for (int depth : {1, 3, 5, 7}) {
    const auto tasks = partition_roots(7, depth);
    std::vector<std::vector<std::vector<std::uint8_t>>> per(tasks.size());
    run_tasks(tasks, 3, [&](std::size_t i, const ClassTask& t) {
      for_each_in_subtree(t, 7, [&](const Graph& g) { per[i].push_back(canonical_form(g).bytes()); });
    });
    std::multiset<std::vector<std::uint8_t>> got;
    for (auto& v : per) got.insert(v.begin(), v.end());
    EXPECT_EQ(got, reference) << "depth=" << depth;
  }
}

TEST(Enumerator, HereditaryPruning) {
  // Max degree <= 2 is closed under vertex deletion.
  auto keep = [](const Graph& g) { return g.max_degree() <= 2; };
  long long pruned = 0, filtered = 0;
  for_each_class(8, [&](const Graph&) { ++pruned; }, keep);
  for_each_class(8, [&](const Graph& g) { filtered += keep(g); });
  EXPECT_EQ(pruned, filtered);
  EXPECT_GT(pruned, 0);
}

TEST(Enumerator, BudgetRefusal) {
  try {
    count_classes(12);
    FAIL() << "expected budget_error";
  } catch (const budget_error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("11"), std::string::npos);
    EXPECT_NE(msg.find("--force"), std::string::npos);
  }
  EXPECT_THROW(partition_roots(12), budget_error);
}

TEST(Enumerator, TrivialSizes) {
  EXPECT_EQ(count_classes(1), 1);
  EXPECT_EQ(count_classes(2), 2);
  const auto two = enumerate_classes(2);
  EXPECT_EQ(two.size(), 2u);
}
