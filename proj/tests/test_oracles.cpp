#include <gtest/gtest.h>

#include "balancelab/checks.hpp"
#include "balancelab/oracles.hpp"
#include "oracle_support.hpp"

using namespace balancelab;

static Pattern P(const char* name) { return pattern_lookup(name); }

TEST(Turan, Examples) {
  EXPECT_EQ(turan_exact(7, P("2K2")), 6);
  EXPECT_EQ(turan_exact(4, P("K3")), 4);
  EXPECT_EQ(turan_exact(3, P("K3")), 2);
}

// Most edges in a p-free graph, by trying every labelled graph.
static int brute_turan(int n, const Graph& p) {
  int best = 0;
  const int m = choose2(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const Graph g = Graph::from_edge_set(n, EdgeSet(bits, 0));
    if (g.size() > best && !oracle::contains_subgraph(g, p)) best = g.size();
  }
  return best;
}

TEST(Turan, AgreesWithBruteForceUpToSix) {
  for (const auto& p : catalogue())
    for (int n = p.v; n <= 6; ++n) EXPECT_EQ(turan_exact(n, p), brute_turan(n, p.graph)) << p.name << " n=" << n;
}

TEST(Turan, MatchesErdosGallai) {
  for (int t = 2; t <= 3; ++t)
    for (int n = (7 * t - 5) / 2; n <= 10; ++n) {
      const long long f = turan_formula(TuranFamily::matching, n, t);
      EXPECT_EQ(turan_exact(n, matching_pattern(t)), f) << "t=" << t << " n=" << n;
      if (2 * n >= 7 * t - 6) {
        EXPECT_EQ(erdos_gallai_simplified(n, t), f);
      }
    }
}

TEST(Turan, ErdosGallaiConstructionIsExtremal) {
  for (int t = 2; t <= 3; ++t)
    for (int n = 2 * t + 1; n <= 9; ++n) {
      const Colouring c = construct(Construction::erdos_gallai, n, t);
      EXPECT_FALSE(tone_spectrum(c, matching_pattern(t)).contains(t));
      if (2 * n >= 7 * t - 6) {
        EXPECT_EQ(c.red_count(), turan_exact(n, matching_pattern(t)));
      }
    }
}

TEST(Formula, Examples) {
  EXPECT_EQ(turan_formula(TuranFamily::matching, 13, 2), 12);
  EXPECT_EQ(turan_formula(TuranFamily::star_ot, 16, 4), 29);
  EXPECT_EQ(turan_formula(TuranFamily::star_bal, 5, 4), 4);
  EXPECT_EQ(turan_formula(TuranFamily::star_ot, 12, 3), 12);
  EXPECT_EQ(turan_formula(TuranFamily::star_ot, 8, 2), 4);
  for (int n = 5; n <= 16; ++n) EXPECT_EQ(turan_formula(TuranFamily::star_bal, n, 4), n - 1);
  EXPECT_EQ(turan_formula(TuranFamily::star_bal, 10, 6), 10 * 2 - 36 / 8 + 1);  // 20 - 4.5 + 1.5
}

TEST(Formula, HypothesisErrors) {
  EXPECT_THROW(turan_formula(TuranFamily::star_bal, 10, 3), precondition_error);
  EXPECT_THROW(turan_formula(TuranFamily::star_bal, 4, 4), precondition_error);
  EXPECT_THROW(turan_formula(TuranFamily::star_ot, 15, 4), precondition_error);
  EXPECT_THROW(erdos_gallai_simplified(7, 3), precondition_error);
  EXPECT_THROW(turan_formula(TuranFamily::matching, 4, 3), precondition_error);
  try {
    turan_formula(TuranFamily::star_ot, 15, 4);
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("4k"), std::string::npos);
  }
  EXPECT_THROW(parse_turan_family("cycle"), invalid_argument);
}

TEST(Formula, StarBalanceAgreesWithSolver) {
  for (int n = 5; n <= 8; ++n) EXPECT_EQ(bal_exact(n, P("K14")).value, turan_formula(TuranFamily::star_bal, n, 4));
}

TEST(Ramsey, Examples) {
  EXPECT_EQ(ramsey_exact(P("2K2"), P("2K2")).value, 5);
  EXPECT_EQ(ramsey_exact(P("P3"), P("P3")).value, 3);
  EXPECT_EQ(ramsey_exact(P("K3"), P("K3")).value, 6);
  EXPECT_EQ(ramsey_exact(P("K2"), P("C4")).value, 4);
}

TEST(Ramsey, WitnessAvoidsBoth) {
  const Pattern g = P("2K2");
  const auto r = ramsey_exact(g, g);
  const Graph w = parse_graph6(r.witness_graph6);
  EXPECT_EQ(w.order(), r.value - 1);
  EXPECT_FALSE(oracle::contains_subgraph(w, g.graph));
  EXPECT_FALSE(oracle::contains_subgraph(w.complement(), g.graph));
}

TEST(Ramsey, BudgetRefusal) {
  SolveOptions opt;
  opt.class_budget = 34;
  EXPECT_THROW(ramsey_exact(P("3K2"), P("3K2"), opt), budget_error);
}

TEST(Registry, Examples) {
  EXPECT_EQ(registry_expected(P("4K2"), Quantity::bal, 12), 11);
  EXPECT_EQ(registry_expected(P("K3"), Quantity::sbal, 9), std::nullopt);
  EXPECT_EQ(registry_expected(P("C4"), Quantity::bal, 4), 1);
  EXPECT_EQ(registry_expected(P("4K2"), Quantity::bal, 9), std::nullopt);
  EXPECT_EQ(registry_expected(P("K14"), Quantity::ot, 16), 29);
  EXPECT_EQ(registry_expected(P("K13"), Quantity::ot, 12), 12);
  EXPECT_EQ(registry_expected(P("K2+K3"), Quantity::bal, 7), 3);
  EXPECT_EQ(registry_expected(P("2K2"), Quantity::sbal, 9), std::nullopt);
}

TEST(Registry, RowsAreWellFormed) {
  const std::size_t sizes[] = {0, 18, 16, 5};
  for (int t = 1; t <= 3; ++t) {
    const auto rows = table_rows(t);
    EXPECT_EQ(rows.size(), sizes[t]);
    std::set<std::string> seen;
    for (const auto& r : rows) {
      EXPECT_FALSE(r.anchor.empty());
      EXPECT_TRUE(seen.insert(pattern_lookup(r.pattern).name).second) << r.pattern;
      if (r.form == ClaimForm::closed) {
        for (int n = *r.valid_from; n <= 16; ++n) EXPECT_TRUE(r.evaluate(n).has_value());
        EXPECT_FALSE(r.evaluate(*r.valid_from - 1).has_value());
      } else {
        EXPECT_FALSE(r.evaluate(12).has_value());
      }
    }
  }
  EXPECT_THROW(table_rows(4), invalid_argument);
}

TEST(Registry, WitnessesAttainClaimsAtRangeStart) {
  for (const auto& r : claim_registry()) {
    if (r.form != ClaimForm::closed) continue;
    const Pattern p = pattern_lookup(r.pattern);
    const int n = std::max(*r.valid_from, p.v);
    const auto w = witness_colouring(r, n);
    ASSERT_TRUE(w.has_value()) << r.anchor;
    EXPECT_EQ(statistic(r.quantity, w->red_count(), n), *r.evaluate(n)) << r.anchor;
    EXPECT_TRUE(avoids_target(r.quantity, w->red(), *cached_copies(p, n))) << r.anchor;
  }
}

TEST(Obstruction, BalancedTypesPreventTargets) {
  const auto a = exhibit_obstruction(P("K3"), Quantity::sbal, BalancedType::A, 4);
  EXPECT_EQ(a.t, 3);
  EXPECT_TRUE(a.avoids);
  EXPECT_FALSE(a.spectrum.contains(2));
  const auto b = exhibit_obstruction(P("C4"), Quantity::ot, BalancedType::B, 4);
  EXPECT_TRUE(b.avoids);
  for (int r : b.spectrum.tones()) EXPECT_EQ(r % 2, 0);
  const auto c = exhibit_obstruction(P("C4"), Quantity::ot, BalancedType::B, 9);
  EXPECT_EQ(c.t, 3);
  EXPECT_TRUE(c.avoids);
  EXPECT_EQ(c.red, c.blue);
  EXPECT_THROW(exhibit_obstruction(P("K3"), Quantity::sbal, BalancedType::A, 5), precondition_error);
  EXPECT_EQ(smallest_obstruction_host(P("K2+K3"), BalancedType::B), 9);
}

TEST(Checks, UnionBound) {
  const auto rep = check_union_bound(P("P3"), P("P3"), 9);
  EXPECT_EQ(rep.ramsey, 3);
  EXPECT_EQ(rep.required_n, 9);
  EXPECT_EQ(rep.bal, 1);
  EXPECT_EQ(rep.ex_g, 4);
  EXPECT_TRUE(rep.holds);
  EXPECT_FALSE(rep.caveat.empty());
  EXPECT_THROW(check_union_bound(P("K2"), P("K2"), 7), precondition_error);
  EXPECT_THROW(check_union_bound(P("P3"), P("P3"), 8), precondition_error);
  EXPECT_THROW(check_union_bound(P("K3"), P("P3"), 12), precondition_error);
  EXPECT_THROW(check_union_bound(P("P3"), P("2K2+P3"), 12), precondition_error);
}

TEST(Checks, TripleRefusesDegenerateAndSmall) {
  EXPECT_THROW(check_triple(1, 6), precondition_error);
  EXPECT_THROW(check_triple(2, 9), precondition_error);
}

TEST(Checks, TripleSampledBeyondBudget) {
  SolveOptions opt;
  opt.class_budget = 274668;
  const auto rep = check_triple(2, 10, opt, 500);
  EXPECT_EQ(rep.mode, "sampled");
  ASSERT_EQ(rep.legs.size(), 3u);
  for (const auto& leg : rep.legs) {
    EXPECT_EQ(leg.value, 9);
    EXPECT_TRUE(leg.witness_ok) << leg.quantity << " " << leg.pattern;
  }
  EXPECT_EQ(rep.erdos_gallai, 9);
  EXPECT_EQ(rep.theorem_from, 13);
}
