#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "balancelab/cache.hpp"
#include "balancelab/checks.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/oracles.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/report.hpp"
#include "balancelab/solver.hpp"

namespace balancelab {

struct TablePolicy {
  long long class_budget = 12'005'168;  // exhaustive scans up to n = 10
  long long samples = 10'000;
  std::map<std::string, int> n_override;  // pattern name -> host size
  SolveOptions solve;
  ResultCache* cache = nullptr;
};

// Status values: exact-match, mismatch, witness-only, sampled, out-of-budget,
// comparison-only.
struct TableRow {
  std::string pattern;
  std::string quantity;
  std::string expression;
  std::string validity;
  std::string anchor;
  std::string amoeba;    // table 1 column, "Y" / "N"
  std::string property;  // omnitonal / strongly balanced column
  int n = 0;
  std::optional<long long> expected;
  std::optional<long long> computed;
  std::optional<long long> turan;  // ex(n,G) alongside, for ex(n,G) rows
  std::string status;
  std::string mode;
  std::string witness;
  std::string detail;
  long long classes_scanned = 0;
  double elapsed_ms = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct VerifyTableReport {
  int table = 0;
  std::vector<TableRow> rows;
  std::map<std::string, int> totals;

  bool ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.status == "mismatch"; });
  }

  friend bool operator==(const VerifyTableReport&, const VerifyTableReport&) = default;
};

namespace detail {

inline bool in_class_budget(int n, const TablePolicy& policy) {
  if (n < 1) return false;
  if (n > enumeration_budget_n && !policy.solve.force) return false;
  if (n >= static_cast<int>(std::size(known_class_counts))) return policy.solve.force;
  return known_class_counts[n] <= policy.class_budget || policy.solve.force;
}

inline std::string type_name(BalancedType t) { return t == BalancedType::A ? "A" : "B"; }

}  // namespace detail

inline VerifyTableReport verify_table(int table, const TablePolicy& policy = {}) {
  const auto claims = table_rows(table);
  VerifyTableReport rep;
  rep.table = table;
  rep.rows.resize(claims.size());

  struct Pending {
    std::size_t row;
    Query query;
  };
  std::map<int, std::vector<Pending>> passes;  // host size -> exhaustive queries
  auto override_n = [&](const ClaimRecord& c) -> std::optional<int> {
    auto it = policy.n_override.find(c.pattern);
    if (it == policy.n_override.end()) return std::nullopt;
    return it->second;
  };

  // ex(n,G) rows: the smallest in-budget n with C(n,2) >= 2 ex(n,G) + 1, else
  // the largest in-budget n.
  std::map<std::size_t, int> turan_choice;
  std::map<std::size_t, int> turan_value;
  {
    std::set<std::size_t> open;
    int lo = max_vertices;
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (claims[i].form != ClaimForm::turan_unknown) continue;
      const Pattern p = pattern_lookup(claims[i].pattern);
      if (auto o = override_n(claims[i])) {
        turan_choice[i] = *o;
        continue;
      }
      open.insert(i);
      lo = std::min(lo, p.v);
    }
    for (int n = lo; !open.empty() && detail::in_class_budget(n, policy); ++n) {
      std::vector<Query> qs;
      std::vector<std::size_t> who;
      for (std::size_t i : open) {
        const Pattern p = pattern_lookup(claims[i].pattern);
        if (p.v > n) continue;
        qs.push_back({Quantity::ex, p});
        who.push_back(i);
      }
      if (qs.empty()) continue;
      const auto res = solve_cached(n, qs, policy.solve, policy.cache);
      for (std::size_t k = 0; k < who.size(); ++k) {
        turan_choice[who[k]] = n;
        turan_value[who[k]] = res[k].value;
        if (choose2(n) >= 2 * res[k].value + 1) open.erase(who[k]);
      }
    }
    for (std::size_t i : open)
      if (!turan_choice.count(i)) turan_choice[i] = -1;
  }

  for (std::size_t i = 0; i < claims.size(); ++i) {
    const ClaimRecord& c = claims[i];
    const Pattern p = pattern_lookup(c.pattern);
    TableRow& row = rep.rows[i];
    row.pattern = c.pattern;
    row.quantity = std::string(quantity_name(c.quantity));
    row.expression = c.expression();
    row.validity = c.validity();
    row.anchor = c.anchor;
    if (c.amoeba) row.amoeba = std::string(1, c.amoeba);
    if (c.property) row.property = std::string(1, c.property);

    if (c.form == ClaimForm::absent) {
      const auto n = override_n(c) ? override_n(c) : smallest_obstruction_host(p, *c.obstruction);
      row.status = "comparison-only";
      row.mode = "obstruction";
      if (!n) {
        row.detail = "no host with a balanced type-" + detail::type_name(*c.obstruction) + " colouring";
        continue;
      }
      row.n = *n;
      const ObstructionReport ob = exhibit_obstruction(p, c.quantity, *c.obstruction, *n);
      row.witness = ob.red_graph6;
      row.detail = "balanced type-" + detail::type_name(ob.type) + "(" + std::to_string(ob.t) + ") colouring, |R| = |B| = " +
                   std::to_string(ob.red) + ", tones " + ob.spectrum.to_string() +
                   (ob.avoids ? ", target avoided" : ", target NOT avoided");
      if (!ob.avoids) row.status = "mismatch";
      continue;
    }

    if (c.form == ClaimForm::turan_unknown) {
      row.status = "comparison-only";
      const int n = turan_choice[i];
      if (n < p.v || !detail::in_class_budget(n, policy)) {
        row.status = "out-of-budget";
        row.detail = "no in-budget host size";
        continue;
      }
      row.n = n;
      if (turan_value.count(i)) row.turan = turan_value[i];
      passes[n].push_back({i, Query{Quantity::ot, p}});
      if (!row.turan) passes[n].push_back({i, Query{Quantity::ex, p}});
      continue;
    }

    const int n = override_n(c).value_or(std::max(*c.valid_from, p.v));
    row.n = n;
    row.expected = c.evaluate(n);
    if (!row.expected) {
      row.status = "out-of-budget";
      row.detail = "host size outside the stated range";
      continue;
    }
    const auto w = witness_colouring(c, n);
    if (detail::in_class_budget(n, policy)) {
      passes[n].push_back({i, Query{c.quantity, p}});
      if (w) {
        const bool avoids = avoids_target(c.quantity, w->red(), *cached_copies(p, n));
        const int stat = statistic(c.quantity, w->red_count(), n);
        row.detail = "witness " + witness_name(c) + ": " + (avoids ? "avoids" : "does NOT avoid") +
                     ", min{|R|,|B|} = " + std::to_string(stat);
        if (!avoids || stat != *row.expected) row.status = "mismatch";
      }
      continue;
    }
    if (!w) {
      row.status = "out-of-budget";
      row.detail = "no exhaustive scan within budget and no registered witness";
      continue;
    }
    SolveOptions sampled = policy.solve;
    sampled.class_budget = policy.class_budget;
    const ThresholdReport tr =
        verify_threshold(n, p, c.quantity, static_cast<int>(*row.expected), *w, sampled, policy.samples);
    row.mode = tr.mode;
    row.witness = tr.witness_graph6;
    row.classes_scanned = tr.scanned;
    row.detail = "witness " + witness_name(c) + ": " + (tr.witness_ok ? "ok" : "FAILED") + "; " +
                 std::to_string(tr.scanned) + " samples, " +
                 (tr.counterexample.empty() ? "no violation" : "violation " + tr.counterexample);
    if (!tr.witness_ok || !tr.counterexample.empty()) row.status = "mismatch";
    else row.status = policy.samples > 0 ? "sampled" : "witness-only";
  }

  for (auto& [n, items] : passes) {
    std::vector<Query> qs;
    for (const auto& it : items) qs.push_back(it.query);
    const auto res = solve_cached(n, qs, policy.solve, policy.cache);
    for (std::size_t k = 0; k < items.size(); ++k) {
      TableRow& row = rep.rows[items[k].row];
      const SolveResult& r = res[k];
      if (r.quantity == Quantity::ex) {
        row.turan = r.value;
        continue;
      }
      row.computed = r.value;
      row.witness = r.witness_graph6;
      row.mode = r.mode;
      row.classes_scanned = r.classes_scanned;
      row.elapsed_ms = r.elapsed_ms;
      if (row.status.empty()) row.status = row.expected && *row.expected == r.value ? "exact-match" : "mismatch";
    }
  }
  for (auto& row : rep.rows)
    if (row.status == "comparison-only" && row.turan && row.computed) {
      const bool cond = choose2(row.n) >= 2 * *row.turan + 1;
      row.detail = "ot = " + std::to_string(*row.computed) + ", ex = " + std::to_string(*row.turan) +
                   (*row.computed == *row.turan ? " (equal)" : " (differ)") +
                   (cond ? "" : "; size condition C(n,2) >= 2ex+1 unmet at this n");
    }
  for (const auto& row : rep.rows) ++rep.totals[row.status];
  return rep;
}

inline json optional_json(const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<long long> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long long>();
}

inline void to_json(json& j, const TableRow& r) {
  j = json{{"pattern", r.pattern},   {"quantity", r.quantity},
           {"expression", r.expression}, {"validity", r.validity},
           {"anchor", r.anchor},         {"amoeba", r.amoeba},
           {"property", r.property},     {"n", r.n},
           {"expected", optional_json(r.expected)},
           {"computed", optional_json(r.computed)},
           {"turan", optional_json(r.turan)},
           {"status", r.status},         {"mode", r.mode},
           {"witness", r.witness},       {"detail", r.detail},
           {"classes_scanned", r.classes_scanned},
           {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const json& j, TableRow& r) {
  r.pattern = j.at("pattern").get<std::string>();
  r.quantity = j.at("quantity").get<std::string>();
  r.expression = j.at("expression").get<std::string>();
  r.validity = j.at("validity").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.amoeba = j.at("amoeba").get<std::string>();
  r.property = j.at("property").get<std::string>();
  r.n = j.at("n").get<int>();
  r.expected = optional_from(j.at("expected"));
  r.computed = optional_from(j.at("computed"));
  r.turan = optional_from(j.at("turan"));
  r.status = j.at("status").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.witness = j.at("witness").get<std::string>();
  r.detail = j.at("detail").get<std::string>();
  r.classes_scanned = j.at("classes_scanned").get<long long>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
}

inline void to_json(json& j, const VerifyTableReport& r) {
  j = json{{"table", r.table}, {"rows", r.rows}, {"totals", r.totals}, {"ok", r.ok()}};
}

inline void from_json(const json& j, VerifyTableReport& r) {
  r.table = j.at("table").get<int>();
  r.rows = j.at("rows").get<std::vector<TableRow>>();
  r.totals = j.at("totals").get<std::map<std::string, int>>();
}

}  // namespace balancelab
