#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balancelab/colouring.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"
#include "balancelab/solver.hpp"

namespace balancelab {

// ex(n,p): the most edges in a graph on n vertices with no copy of p.
inline SolveResult turan_solve(int n, const Pattern& p, const SolveOptions& opt = {}) {
  if (n < p.v) {
    SolveResult r;
    r.quantity = Quantity::ex;
    r.n = n;
    r.pattern = p.name;
    r.value = choose2(n);
    r.witness_graph6 = emit_graph6(Graph::complete(n));
    r.note = "host smaller than pattern";
    return r;
  }
  return solve(Quantity::ex, n, p, opt);
}

inline int turan_exact(int n, const Pattern& p, const SolveOptions& opt = {}) { return turan_solve(n, p, opt).value; }

enum class TuranFamily { matching, star_bal, star_ot };

inline TuranFamily parse_turan_family(std::string_view s) {
  if (s == "tK2" || s == "tk2" || s == "matching") return TuranFamily::matching;
  if (s == "star-bal") return TuranFamily::star_bal;
  if (s == "star-ot") return TuranFamily::star_ot;
  throw invalid_argument("unknown formula family '" + std::string(s) + "' (expected tK2, star-bal, star-ot)");
}

// C(t-1,2) + (t-1)(n-t+1): the tK2-free graph K_{t-1} joined to n-t+1 vertices.
inline long long erdos_gallai_simplified(int n, int t) {
  if (t < 1) throw precondition_error("tK2 formula needs t >= 1");
  if (2 * n < 7 * t - 6)
    throw precondition_error("simplified tK2 formula needs n >= (7t-6)/2; got n=" + std::to_string(n) +
                             ", t=" + std::to_string(t));
  return binomial(t - 1, 2) + static_cast<long long>(t - 1) * (n - t + 1);
}

// max{ C(2t-1,2), C(t-1,2) + (t-1)(n-t+1) }.
inline long long erdos_gallai_max(int n, int t) {
  if (t < 1) throw precondition_error("tK2 formula needs t >= 1");
  if (n < 2 * t - 1)
    throw precondition_error("tK2 formula needs n >= 2t-1; got n=" + std::to_string(n) + ", t=" + std::to_string(t));
  return std::max(binomial(2 * t - 1, 2), binomial(t - 1, 2) + static_cast<long long>(t - 1) * (n - t + 1));
}

inline long long turan_formula(TuranFamily family, int n, int k) {
  switch (family) {
    case TuranFamily::matching:
      return erdos_gallai_max(n, k);
    case TuranFamily::star_bal: {
      if (k < 2 || k % 2) throw precondition_error("star balance formula needs k even and k >= 2");
      const int need = std::max(3, k * k / 4 + 1);
      if (n < need)
        throw precondition_error("star balance formula needs n >= max{3, k^2/4+1} = " + std::to_string(need));
      // n(k/2-1) - k^2/8 + k/4, scaled by 8 to stay integral.
      return (4LL * n * (k - 2) - static_cast<long long>(k) * k + 2LL * k) / 8;
    }
    case TuranFamily::star_ot: {
      if (k < 1) throw precondition_error("star omnitonal formula needs k >= 1");
      if (n < 4 * k) throw precondition_error("star omnitonal formula needs n >= 4k = " + std::to_string(4 * k));
      if (k <= 3) return static_cast<long long>(k - 1) * n / 2;
      return static_cast<long long>(k - 2) * n - (static_cast<long long>(k) * k - 3LL * k) / 2 - 1;
    }
  }
  return 0;
}

struct RamseyResult {
  int value = 0;
  std::string witness_graph6;  // red graph on value-1 vertices with no red g and no blue h
  long long classes_scanned = 0;
};

// Least n with every red graph on n vertices containing g or its complement
// containing h.
inline RamseyResult ramsey_exact(const Pattern& g, const Pattern& h, const SolveOptions& opt = {}) {
  RamseyResult res;
  std::string previous = emit_graph6(Graph(1));
  for (int n = 1;; ++n) {
    bool within = n <= enumeration_budget_n || opt.force;
    if (within && opt.class_budget >= 0 && !opt.force && known_class_counts[n] > opt.class_budget) within = false;
    if (!within || n > max_vertices)
      throw budget_error("ramsey: no forcing host found up to n = " + std::to_string(n - 1) + ", so R(" + g.name +
                         "," + h.name + ") >= " + std::to_string(n));
    const auto cg = cached_copies(g, n);
    const auto ch = cached_copies(h, n);
    const EdgeSet all = EdgeSet::prefix(choose2(n));
    std::string avoider;
    for_each_class(
        n,
        [&](const Graph& x) {
          ++res.classes_scanned;
          if (!avoider.empty()) return;
          const EdgeSet red = x.edge_set();
          if (has_tone(red, *cg, g.e)) return;
          if (has_tone(red ^ all, *ch, h.e)) return;
          avoider = emit_graph6(canonical_relabelling(x));
        },
        opt.force);
    if (avoider.empty()) {
      res.value = n;
      res.witness_graph6 = previous;
      return res;
    }
    previous = avoider;
  }
}

// One row of the value tables. The value is floor((slope*n + offset)/divisor)
// for n >= valid_from; rows with an unknown range or a nonexistence mark have
// no value.
enum class ClaimForm { closed, turan_unknown, absent };

enum class Witness { none, star, clique, two_factor, erdos_gallai, matching };

struct ClaimRecord {
  int table = 0;
  std::string pattern;
  Quantity quantity = Quantity::bal;
  ClaimForm form = ClaimForm::closed;
  int slope = 0, offset = 0, divisor = 1;
  std::optional<int> valid_from;
  Witness witness = Witness::none;
  int witness_t = 0;
  std::optional<BalancedType> obstruction;
  char amoeba = 0;    // table 1 only: 'Y' or 'N'
  char property = 0;  // omnitonal / strongly balanced column, where the table has one
  std::string anchor;

  std::optional<long long> evaluate(int n) const {
    if (form != ClaimForm::closed || !valid_from || n < *valid_from) return std::nullopt;
    const long long num = static_cast<long long>(slope) * n + offset;
    return num >= 0 ? num / divisor : -((-num + divisor - 1) / divisor);
  }

  std::string expression() const {
    if (form == ClaimForm::absent) return "N";
    if (form == ClaimForm::turan_unknown) return "ex(n,G)";
    std::string s;
    if (slope == 0) s = std::to_string(offset);
    else {
      s = (slope == 1 ? "" : std::to_string(slope)) + "n";
      if (offset > 0) s += "+" + std::to_string(offset);
      if (offset < 0) s += std::to_string(offset);
    }
    if (divisor == 1) return s;
    return "floor(" + (s.size() > 2 ? "(" + s + ")" : s) + "/" + std::to_string(divisor) + ")";
  }

  std::string validity() const {
    if (form == ClaimForm::absent) return "-";
    if (!valid_from) return "n >= n0 (unknown)";
    return "n >= " + std::to_string(*valid_from);
  }
};

namespace detail {

inline ClaimRecord closed_row(int table, std::string pattern, Quantity q, int slope, int offset, int from,
                              Witness w, int t = 0, int divisor = 1) {
  ClaimRecord r;
  r.table = table;
  r.anchor = "table" + std::to_string(table) + ":" + pattern;
  r.pattern = std::move(pattern);
  r.quantity = q;
  r.slope = slope;
  r.offset = offset;
  r.divisor = divisor;
  r.valid_from = from;
  r.witness = w;
  r.witness_t = t;
  return r;
}

inline ClaimRecord turan_row(std::string pattern) {
  ClaimRecord r;
  r.table = 1;
  r.anchor = "table1:" + pattern;
  r.pattern = std::move(pattern);
  r.quantity = Quantity::ot;
  r.form = ClaimForm::turan_unknown;
  return r;
}

inline ClaimRecord absent_row(int table, std::string pattern, Quantity q, BalancedType obstruction) {
  ClaimRecord r;
  r.table = table;
  r.anchor = "table" + std::to_string(table) + ":" + pattern;
  r.pattern = std::move(pattern);
  r.quantity = q;
  r.form = ClaimForm::absent;
  r.obstruction = obstruction;
  return r;
}

inline ClaimRecord flags(ClaimRecord r, char amoeba, char property) {
  r.amoeba = amoeba;
  r.property = property;
  return r;
}

}  // namespace detail

// Rows in table order.
inline const std::vector<ClaimRecord>& claim_registry() {
  using detail::absent_row, detail::closed_row, detail::flags, detail::turan_row;
  constexpr auto bal = Quantity::bal, sbal = Quantity::sbal, ot = Quantity::ot;
  static const std::vector<ClaimRecord> rows = {
      flags(turan_row("4K2"), 'Y', 'Y'),
      flags(turan_row("2K2+P3"), 'Y', 'Y'),
      flags(turan_row("2P3"), 'Y', 'Y'),
      flags(turan_row("K2+P4"), 'Y', 'Y'),
      flags(turan_row("P5"), 'Y', 'Y'),
      flags(turan_row("chair"), 'Y', 'Y'),
      flags(absent_row(1, "K2+K3", ot, BalancedType::B), 'N', 'N'),
      flags(absent_row(1, "C4", ot, BalancedType::B), 'N', 'N'),
      flags(closed_row(1, "K13+K2", ot, 1, 0, 10, Witness::two_factor), 'N', 'Y'),
      flags(closed_row(1, "K14", ot, 2, -3, 16, Witness::erdos_gallai, 3), 'N', 'Y'),
      flags(absent_row(1, "K3+e", ot, BalancedType::B), 'Y', 'N'),
      flags(closed_row(1, "K13", ot, 1, 0, 12, Witness::two_factor), 'N', 'Y'),
      flags(turan_row("P4"), 'Y', 'Y'),
      flags(absent_row(1, "K3", ot, BalancedType::B), 'N', 'N'),
      flags(turan_row("3K2"), 'Y', 'Y'),
      flags(turan_row("P3+K2"), 'Y', 'Y'),
      // ex(n,P3) = floor(n/2), a maximum matching.
      flags(closed_row(1, "P3", ot, 1, 0, 3, Witness::matching, 0, 2), 'Y', 'Y'),
      flags(turan_row("2K2"), 'Y', 'Y'),

      closed_row(2, "4K2", bal, 1, -1, 10, Witness::star),
      closed_row(2, "2K2+P3", bal, 0, 1, 8, Witness::clique, 2),
      closed_row(2, "2P3", bal, 0, 1, 7, Witness::clique, 2),
      closed_row(2, "K2+P4", bal, 0, 1, 7, Witness::clique, 2),
      closed_row(2, "P5", bal, 0, 1, 6, Witness::clique, 2),
      closed_row(2, "chair", bal, 0, 1, 7, Witness::clique, 2),
      closed_row(2, "K2+K3", bal, 0, 3, 7, Witness::clique, 3),
      closed_row(2, "C4", bal, 0, 1, 4, Witness::clique, 2),
      closed_row(2, "K13+K2", bal, 1, -1, 9, Witness::star),
      closed_row(2, "K14", bal, 1, -1, 5, Witness::star),
      closed_row(2, "K3+e", bal, 0, 1, 5, Witness::clique, 2),
      // The three-edge rows carry no range in the table; n >= 6 is used.
      closed_row(2, "K13", bal, 0, 0, 6, Witness::clique, 1),
      closed_row(2, "P4", bal, 0, 0, 6, Witness::clique, 1),
      closed_row(2, "K3", bal, 0, 0, 6, Witness::clique, 1),
      closed_row(2, "3K2", bal, 0, 0, 6, Witness::clique, 1),
      closed_row(2, "P3+K2", bal, 0, 0, 6, Witness::clique, 1),

      flags(closed_row(3, "K13", sbal, 1, -1, 4, Witness::star), 0, 'Y'),
      flags(closed_row(3, "P4", sbal, 0, 1, 7, Witness::clique, 2), 0, 'Y'),
      flags(absent_row(3, "K3", sbal, BalancedType::A), 0, 'N'),
      flags(closed_row(3, "3K2", sbal, 1, -1, 7, Witness::star), 0, 'Y'),
      flags(closed_row(3, "P3+K2", sbal, 0, 1, 7, Witness::clique, 2), 0, 'Y'),
  };
  return rows;
}

inline std::vector<ClaimRecord> table_rows(int table) {
  if (table < 1 || table > 3) throw invalid_argument("table must be 1, 2 or 3");
  std::vector<ClaimRecord> out;
  for (const auto& r : claim_registry())
    if (r.table == table) out.push_back(r);
  return out;
}

inline std::optional<ClaimRecord> find_claim(const Pattern& p, Quantity q) {
  for (const auto& r : claim_registry())
    if (r.quantity == q && pattern_lookup(r.pattern).key == p.key) return r;
  return std::nullopt;
}

// The table's value at n, if n is inside the row's stated range.
inline std::optional<long long> registry_expected(const Pattern& p, Quantity q, int n) {
  auto r = find_claim(p, q);
  if (!r) return std::nullopt;
  return r->evaluate(n);
}

inline std::optional<Colouring> witness_colouring(const ClaimRecord& r, int n) {
  switch (r.witness) {
    case Witness::none: return std::nullopt;
    case Witness::star: return construct(Construction::star, n);
    case Witness::clique: return construct(Construction::clique, n, r.witness_t);
    case Witness::two_factor: return construct(Construction::two_factor, n);
    case Witness::erdos_gallai: return construct(Construction::erdos_gallai, n, r.witness_t);
    case Witness::matching: {
      Graph m(n);
      for (int v = 0; v + 1 < n; v += 2) m.add_edge(v, v + 1);
      return construct(Construction::from_red_graph, n, std::nullopt, &m);
    }
  }
  return std::nullopt;
}

inline std::string witness_name(const ClaimRecord& r) {
  switch (r.witness) {
    case Witness::none: return "none";
    case Witness::star: return "star";
    case Witness::clique: return "clique t=" + std::to_string(r.witness_t);
    case Witness::two_factor: return "two-factor";
    case Witness::erdos_gallai: return "erdos-gallai t=" + std::to_string(r.witness_t);
    case Witness::matching: return "from-red-graph (maximum matching)";
  }
  return "none";
}

// verify_threshold with the registered witness construction of (p, q).
inline ThresholdReport verify_threshold(int n, const Pattern& p, Quantity q, int claimed,
                                        const SolveOptions& opt = {}, long long samples = 10'000) {
  auto r = find_claim(p, q);
  std::optional<Colouring> w = r ? witness_colouring(*r, n) : std::nullopt;
  if (!w)
    throw precondition_error("no registered witness construction for " + std::string(quantity_name(q)) + "(n," +
                             p.name + "); supply a witness graph");
  return verify_threshold(n, p, q, claimed, *w, opt, samples);
}

}  // namespace balancelab
