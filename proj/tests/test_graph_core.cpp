#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "balancelab/canonical.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/pattern.hpp"
#include "oracle_support.hpp"

using namespace balancelab;

TEST(EdgeIndex, Examples) {
  EXPECT_EQ(edge_index(0, 1, 5), 0);
  EXPECT_EQ(edge_index(0, 2, 5), 1);
  EXPECT_EQ(edge_index(3, 4, 5), 9);
}

TEST(EdgeIndex, ColexBijection) {
  for (int n = 1; n <= max_vertices; ++n) {
    // Walk pairs in colex order: by larger endpoint, then smaller.
    int expect = 0;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        ASSERT_EQ(edge_index(u, v, n), expect);
        auto p = edge_endpoints(expect);
        ASSERT_EQ(p.u, u);
        ASSERT_EQ(p.v, v);
        ++expect;
      }
    EXPECT_EQ(expect, choose2(n));
  }
}

TEST(EdgeIndex, Errors) {
  EXPECT_THROW(edge_index(2, 2, 5), invalid_argument);
  EXPECT_THROW(edge_index(3, 1, 5), invalid_argument);
  EXPECT_THROW(edge_index(0, 5, 5), invalid_argument);
  EXPECT_THROW(edge_index(-1, 2, 5), invalid_argument);
  EXPECT_THROW(edge_index(0, 1, 17), invalid_argument);
}

TEST(GraphTest, BasicInvariants) {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  EXPECT_EQ(g.size(), 4);
  for (int u = 0; u < 5; ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (int v = 0; v < 5; ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
  }
  EXPECT_EQ(g.edge_set().count(), g.size());
  EXPECT_EQ(g.complement().size(), choose2(5) - 4);
  EXPECT_EQ(Graph::from_edge_set(5, g.edge_set()), g);
  EXPECT_THROW(Graph(17), invalid_argument);
  EXPECT_THROW(g.add_edge(1, 1), invalid_argument);
  EXPECT_THROW(Graph::from_edge_set(3, EdgeSet::single(3)), invalid_argument);
}

TEST(Canonical, Examples) {
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph b = Graph::from_edges(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(Graph::complete(3)), canonical_form(a));
}

// All 2^C(n,2) labelled graphs on n vertices.
static std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  const int m = choose2(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
    out.push_back(Graph::from_edge_set(n, EdgeSet(bits, 0)));
  return out;
}

TEST(Canonical, ElevenClassesOnFourVertices) {
  std::set<std::vector<std::uint8_t>> keys;
  std::set<EdgeSet> brute;
  for (const Graph& g : all_graphs(4)) {
    keys.insert(canonical_form(g).bytes());
    brute.insert(oracle::brute_canonical(g));
  }
  EXPECT_EQ(keys.size(), 11u);
  EXPECT_EQ(brute.size(), 11u);
}

TEST(Canonical, AgreesWithBruteForceExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    std::map<EdgeSet, std::vector<std::uint8_t>> by_brute;
    std::map<std::vector<std::uint8_t>, EdgeSet> by_key;
    for (const Graph& g : all_graphs(n)) {
      const EdgeSet b = oracle::brute_canonical(g);
      const auto k = canonical_form(g).bytes();
      auto [it, fresh] = by_brute.emplace(b, k);
      ASSERT_EQ(it->second, k) << "isomorphic graphs got different keys at n=" << n;
      auto [jt, fresh2] = by_key.emplace(k, b);
      ASSERT_EQ(jt->second, b) << "non-isomorphic graphs share a key at n=" << n;
    }
  }
}

TEST(Canonical, AgreesWithBruteForceSampledSix) {
  std::mt19937_64 rng(6);
  std::map<EdgeSet, std::vector<std::uint8_t>> by_brute;
  std::map<std::vector<std::uint8_t>, EdgeSet> by_key;
  for (int i = 0; i < 4000; ++i) {
    const Graph g = oracle::random_graph(6, 0.2 + 0.6 * (i % 7) / 6.0, rng);
    const EdgeSet b = oracle::brute_canonical(g);
    const auto k = canonical_form(g).bytes();
    auto [it, f1] = by_brute.emplace(b, k);
    ASSERT_EQ(it->second, k);
    auto [jt, f2] = by_key.emplace(k, b);
    ASSERT_EQ(jt->second, b);
  }
}

static std::vector<Graph> fixture_graphs() {
  std::vector<Graph> out;
  for (const auto& p : catalogue()) out.push_back(p.graph);
  out.push_back(Graph::complete(7));
  out.push_back(Graph(9));
  // Petersen graph: outer 5-cycle, inner pentagram, spokes.
  Graph pet(10);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(5 + i, 5 + (i + 2) % 5);
    pet.add_edge(i, 5 + i);
  }
  out.push_back(pet);
  // 3-cube, a vertex-transitive bipartite graph.
  Graph cube(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) cube.add_edge(v, v ^ (1 << b));
  out.push_back(cube);
  std::mt19937_64 rng(11);
  for (int n : {8, 12, 16}) out.push_back(oracle::random_graph(n, 0.5, rng));
  // Disjoint union of two 5-cycles, with a large automorphism group.
  Graph cc(10);
  for (int i = 0; i < 5; ++i) {
    cc.add_edge(i, (i + 1) % 5);
    cc.add_edge(5 + i, 5 + (i + 1) % 5);
  }
  out.push_back(cc);
  return out;
}

TEST(Canonical, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(1000);
  for (const Graph& g : fixture_graphs()) {
    const CanonicalKey k = canonical_form(g);
    for (int i = 0; i < 1000; ++i) {
      const auto perm = oracle::random_permutation(g.order(), rng);
      ASSERT_EQ(canonical_form(g.permuted(perm)), k);
    }
  }
}

TEST(Canonical, Idempotent) {
  for (const Graph& g : fixture_graphs()) {
    const Graph c = canonical_relabelling(g);
    EXPECT_EQ(canonical_form(c), canonical_form(g));
    EXPECT_EQ(canonical_relabelling(c), c);
  }
}

TEST(Canonical, AutomorphismGroups) {
  const auto fx = fixture_graphs();
  const Graph& pet = fx[fx.size() - 6];
  EXPECT_EQ(count_automorphisms(pet), 120);
  EXPECT_EQ(count_automorphisms(fx[fx.size() - 5]), 48);
  EXPECT_EQ(count_automorphisms(fx.back()), 200);
  EXPECT_EQ(count_automorphisms(Graph::complete(7)), 5040);
}

TEST(Graph6, EmptyFive) {
  const Graph g = parse_graph6("D??");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 0);
  EXPECT_EQ(emit_graph6(Graph(5)), "D??");
}

TEST(Graph6, HandEncodedK4) {
  // n=4: 'C'. Six one-bits padded: 111111 -> 63+63 = 126 = '~'.
  const Graph g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
  // Path 0-1-2: bits x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 = 40 -> 'g'.
  EXPECT_EQ(emit_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}})), "Bg");
}

TEST(Graph6, RoundTrip) {
  for (const char* s : {"@", "A?", "A_", "Bw", "C~", "D??", "DQc", "E?Bw", "F?~v_", "G?`@F_", "I???????w",
                        "O~~~~~~~~~~~~~~~~~~~~", "H~~~~~~"}) {
    EXPECT_EQ(emit_graph6(parse_graph6(s)), s) << s;
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + i % 16, 0.4, rng);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), Graph::complete(4));
  EXPECT_EQ(parse_graph6("C~\n"), Graph::complete(4));
}

TEST(Graph6, ErrorsCarryOffsets) {
  auto offset_of = [](std::string_view s) -> long long {
    try {
      parse_graph6(s);
    } catch (const parse_error& e) {
      return static_cast<long long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of(">>graf6<<C~"), 0);
  EXPECT_EQ(offset_of("C"), 1);       // truncated
  EXPECT_EQ(offset_of("C~?"), 2);     // trailing byte
  EXPECT_EQ(offset_of("C\x7f"), 1);   // byte out of range
  EXPECT_EQ(offset_of("B\x7e"), 1);   // padding bits set (n=3 uses 3 of 6 bits)
  EXPECT_EQ(offset_of("Q????????????????????"), 0);  // 18 vertices
}

TEST(Catalogue, EighteenRowsWithoutIsolatedVertices) {
  const auto& cat = catalogue();
  ASSERT_EQ(cat.size(), 18u);
  std::set<std::string> names;
  std::set<std::vector<std::uint8_t>> keys;
  std::map<int, int> by_size;
  for (const auto& p : cat) {
    names.insert(p.name);
    keys.insert(p.key.bytes());
    ++by_size[p.e];
    EXPECT_LE(p.e, 4);
    EXPECT_GE(p.graph.min_degree(), 1) << p.name;
    EXPECT_EQ(p.v, p.graph.order());
    EXPECT_EQ(p.e, p.graph.size());
  }
  EXPECT_EQ(names.size(), 18u);
  EXPECT_EQ(keys.size(), 18u);
  EXPECT_EQ(by_size[2], 2);
  EXPECT_EQ(by_size[3], 5);
  EXPECT_EQ(by_size[4], 11);
}

// Self-isomorphisms by trying every permutation.
static long long brute_aut(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do count += g.permuted(perm) == g;
  while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(Catalogue, AutomorphismCountsByBruteForce) {
  for (const auto& p : catalogue()) EXPECT_EQ(p.aut, brute_aut(p.graph)) << p.name;
}

TEST(Catalogue, Lookups) {
  const Pattern k2k3 = pattern_lookup("K2+K3");
  EXPECT_EQ(k2k3.v, 5);
  EXPECT_EQ(k2k3.e, 4);
  EXPECT_FALSE(k2k3.bipartite);

  const Pattern m4 = pattern_lookup("4K2");
  EXPECT_EQ(m4.v, 8);
  EXPECT_EQ(m4.e, 4);
  EXPECT_EQ(m4.aut, 384);

  const Pattern chair = pattern_lookup("chair");
  EXPECT_EQ(chair.v, 5);
  EXPECT_EQ(chair.e, 4);
  EXPECT_EQ(chair.graph.degree_sequence(), (std::vector<int>{1, 1, 1, 2, 3}));
  Graph built = star_pattern(3).graph.with_vertex(VertexMask(1u << 1));
  EXPECT_TRUE(are_isomorphic(built, chair.graph));

  EXPECT_EQ(pattern_lookup("K_{1,2}").key, pattern_lookup("P3").key);
  EXPECT_EQ(pattern_lookup("K_{1,3} \xE2\x88\xAA K_2").name, "K13+K2");
  EXPECT_EQ(pattern_lookup("k13").name, "K13");
  EXPECT_EQ(pattern_lookup("5K2").e, 5);
}

TEST(Catalogue, UnknownNameListsCatalogue) {
  try {
    pattern_lookup("K7");
    FAIL() << "expected lookup_error";
  } catch (const lookup_error& e) {
    const std::string msg = e.what();
    for (const auto& p : catalogue()) EXPECT_NE(msg.find(p.name), std::string::npos) << p.name;
  }
}
