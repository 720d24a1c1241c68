#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "balancelab/colouring.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/oracles.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"
#include "balancelab/solver.hpp"

namespace balancelab {

struct UnionBoundReport {
  std::string g, h, union_pattern;
  int n = 0;
  int ramsey = 0;
  int required_n = 0;
  int bal = 0;
  int ex_g = 0, ex_h = 0;
  int bound = 0;
  int slack = 0;
  bool holds = false;
  std::string witness_graph6;
  long long classes_scanned = 0;
  std::string caveat;
};

// bal(n, g+h) <= max{ex(n,g), ex(n,h)} for bipartite g, h of equal size once
// n >= v(g) + v(h) + R(g,h).
inline UnionBoundReport check_union_bound(const Pattern& g, const Pattern& h, int n, const SolveOptions& opt = {}) {
  if (g.e == 1 || h.e == 1)
    throw precondition_error("union bound: e = 1 is degenerate (every single edge is balanced)");
  if (!g.bipartite || !h.bipartite) throw precondition_error("union bound: both patterns must be bipartite");
  if (g.e != h.e)
    throw precondition_error("union bound: e(" + g.name + ") = " + std::to_string(g.e) + " differs from e(" +
                             h.name + ") = " + std::to_string(h.e));
  UnionBoundReport rep;
  rep.g = g.name;
  rep.h = h.name;
  rep.n = n;
  rep.ramsey = ramsey_exact(g, h, opt).value;
  rep.required_n = g.v + h.v + rep.ramsey;
  if (n < rep.required_n)
    throw precondition_error("union bound: need n >= v(G)+v(H)+R(G,H) = " + std::to_string(g.v) + "+" +
                             std::to_string(h.v) + "+" + std::to_string(rep.ramsey) + " = " +
                             std::to_string(rep.required_n) + ", got n = " + std::to_string(n));
  const Pattern u = disjoint_union(g, h);
  rep.union_pattern = u.name;
  const auto res =
      solve_many(n, {Query{Quantity::bal, u}, Query{Quantity::ex, g}, Query{Quantity::ex, h}}, opt);
  rep.bal = res[0].value;
  rep.witness_graph6 = res[0].witness_graph6;
  rep.ex_g = res[1].value;
  rep.ex_h = res[2].value;
  rep.classes_scanned = res[0].classes_scanned;
  rep.bound = std::max(rep.ex_g, rep.ex_h);
  rep.slack = rep.bound - rep.bal;
  rep.holds = rep.bal <= rep.bound;
  rep.caveat = "only the explicit bound n >= v(G)+v(H)+R(G,H) is enforced; the unspecified large-n condition is not";
  return rep;
}

struct TripleLeg {
  std::string quantity;
  std::string pattern;
  int value = 0;
  std::string mode;
  bool witness_ok = true;
  long long scanned = 0;
};

struct TripleReport {
  int t = 0;
  int n = 0;
  std::vector<TripleLeg> legs;  // sbal((2t-1)K2), bal(2tK2), bal((2t+1)K2)
  long long erdos_gallai = 0;   // C(t-1,2) + (t-1)(n-t+1)
  bool all_equal = false;
  bool equal_erdos_gallai = false;
  int theorem_from = 0;  // the matching theorem's stated range starts here
  std::string mode;
};

inline TripleReport check_triple(int t, int n, const SolveOptions& opt = {}, long long samples = 10'000) {
  if (t == 1) throw precondition_error("triple: t = 1 is degenerate (sbal of K2 has e = 1)");
  if (t < 1) throw invalid_argument("triple: t must be positive");
  if (4 * t + 2 > max_vertices) throw invalid_argument("triple: (2t+1)K2 exceeds 16 vertices");
  if (n < 4 * t + 2)
    throw precondition_error("triple: need n >= v((2t+1)K2) = " + std::to_string(4 * t + 2));
  TripleReport rep;
  rep.t = t;
  rep.n = n;
  rep.erdos_gallai = erdos_gallai_simplified(n, t);
  rep.theorem_from = 7 * t - 1;
  const Pattern a = matching_pattern(2 * t - 1), b = matching_pattern(2 * t), c = matching_pattern(2 * t + 1);
  const std::vector<Query> qs = {{Quantity::sbal, a}, {Quantity::bal, b}, {Quantity::bal, c}};

  bool exhaustive = true;
  try {
    detail::check_class_budget(n, opt);
  } catch (const budget_error&) {
    exhaustive = false;
  }
  if (exhaustive) {
    rep.mode = "exhaustive";
    for (const auto& r : solve_many(n, qs, opt))
      rep.legs.push_back({std::string(quantity_name(r.quantity)), r.pattern, r.value, r.mode, true, r.classes_scanned});
  } else {
    // The extremal matching-free colouring attains the formula; the rest is sampled.
    rep.mode = "sampled";
    const Colouring w = construct(Construction::erdos_gallai, n, t);
    for (const auto& q : qs) {
      const auto tr = verify_threshold(n, q.pattern, q.quantity, static_cast<int>(rep.erdos_gallai), w, opt, samples);
      rep.legs.push_back({std::string(quantity_name(q.quantity)), q.pattern.name, tr.claimed, tr.mode,
                          tr.witness_ok && tr.scan_ok, tr.scanned});
    }
  }
  rep.all_equal = std::all_of(rep.legs.begin(), rep.legs.end(),
                              [&](const TripleLeg& l) { return l.value == rep.legs.front().value; });
  rep.equal_erdos_gallai = std::all_of(rep.legs.begin(), rep.legs.end(),
                                       [&](const TripleLeg& l) { return l.value == rep.erdos_gallai; });
  return rep;
}

// A balanced type-A(t) or type-B(t) colouring and whether it avoids the target.
struct ObstructionReport {
  BalancedType type = BalancedType::A;
  int n = 0;
  int t = 0;
  std::string red_graph6;
  int red = 0, blue = 0;
  ToneSpectrum spectrum;
  bool avoids = false;
};

inline ObstructionReport exhibit_obstruction(const Pattern& p, Quantity q, BalancedType type, int n) {
  const auto t = find_balanced_type(type, n);
  if (!t)
    throw precondition_error(std::string("no balanced type-") + (type == BalancedType::A ? "A" : "B") +
                             " colouring of K_" + std::to_string(n));
  const Colouring c =
      construct(type == BalancedType::A ? Construction::clique : Construction::bipartite, n, *t);
  ObstructionReport rep;
  rep.type = type;
  rep.n = n;
  rep.t = *t;
  rep.red_graph6 = emit_graph6(c.red_graph());
  rep.red = c.red_count();
  rep.blue = c.blue_count();
  rep.spectrum = tone_spectrum(c, p);
  rep.avoids = avoids_target(q, c.red(), *cached_copies(p, n));
  return rep;
}

// Smallest host n >= max(v(p), from) admitting a balanced colouring of the type.
inline std::optional<int> smallest_obstruction_host(const Pattern& p, BalancedType type, int from = 2) {
  for (int n = std::max({p.v, from, 2}); n <= max_vertices; ++n)
    if (find_balanced_type(type, n)) return n;
  return std::nullopt;
}

}  // namespace balancelab
