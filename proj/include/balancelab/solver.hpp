#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "balancelab/canonical.hpp"
#include "balancelab/colouring.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"

namespace balancelab {

// bal:  some copy has tone floor(e/2) or ceil(e/2)
// sbal: copies with both of those tones exist (odd e)
// ot:   every tone 0..e occurs
// ex:   a fully red copy exists (Turan; statistic |R| instead of min{|R|,|B|})
enum class Quantity { bal, sbal, ot, ex };

inline std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::bal: return "bal";
    case Quantity::sbal: return "sbal";
    case Quantity::ot: return "ot";
    case Quantity::ex: return "ex";
  }
  return "?";
}

inline Quantity parse_quantity(std::string_view s) {
  if (s == "bal") return Quantity::bal;
  if (s == "sbal") return Quantity::sbal;
  if (s == "ot") return Quantity::ot;
  if (s == "ex") return Quantity::ex;
  throw invalid_argument("unknown quantity '" + std::string(s) + "' (expected bal, sbal, ot or ex)");
}

// True when the red set avoids the quantity's target condition.
inline bool avoids_target(Quantity q, const EdgeSet& red, const CopyList& copies) {
  const int e = copies.pattern().e;
  switch (q) {
    case Quantity::bal: return !has_balanced(red, copies);
    case Quantity::sbal: {
      const ToneSpectrum s = tone_spectrum(red, copies);
      return !s.has_both_strong();
    }
    case Quantity::ot: return !tone_spectrum(red, copies).full();
    case Quantity::ex: return !has_tone(red, copies, e);
  }
  return false;
}

inline int statistic(Quantity q, int red_count, int n) {
  const int blue = choose2(n) - red_count;
  return q == Quantity::ex ? red_count : std::min(red_count, blue);
}

struct SolveResult {
  Quantity quantity = Quantity::bal;
  int n = 0;
  std::string pattern;
  int value = 0;
  std::string witness_graph6;  // canonical red graph attaining the value
  long long classes_scanned = 0;
  double elapsed_ms = 0;
  std::string mode = "exhaustive";
  bool degenerate = false;
  std::string note;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

struct SolveOptions {
  int jobs = 1;
  bool force = false;
  long long class_budget = -1;  // refuse when the class count exceeds this; -1 means no limit
  bool complements = false;     // scan blue graphs as red instead
};

struct Query {
  Quantity quantity;
  Pattern pattern;
};

namespace detail {

inline void check_query(const Query& q, int n) {
  if (n < q.pattern.v)
    throw precondition_error("n = " + std::to_string(n) + " is smaller than v(" + q.pattern.name + ") = " +
                             std::to_string(q.pattern.v));
  if (q.quantity == Quantity::sbal && q.pattern.e % 2 == 0)
    throw invalid_argument("strong balance is defined for odd size only; " + q.pattern.name + " has " +
                           std::to_string(q.pattern.e) + " edges");
}

inline void check_class_budget(int n, const SolveOptions& opt) {
  check_enumeration_budget(n, opt.force);
  if (opt.class_budget >= 0 && n < static_cast<int>(std::size(known_class_counts)) &&
      known_class_counts[n] > opt.class_budget && !opt.force)
    throw budget_error("n = " + std::to_string(n) + " needs " + std::to_string(known_class_counts[n]) +
                       " classes, over the budget of " + std::to_string(opt.class_budget));
}

struct Best {
  int value = -1;
  Graph witness;
};

}  // namespace detail

// One pass over the classes on n vertices answering several queries. For each
// query the value is the maximum statistic over avoiding red graphs; the
// witness is the first avoiding class in stream order attaining it.
inline std::vector<SolveResult> solve_many(int n, const std::vector<Query>& queries, const SolveOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  for (const Query& q : queries) detail::check_query(q, n);
  detail::check_class_budget(n, opt);

  const std::size_t nq = queries.size();
  std::vector<std::shared_ptr<const CopyList>> copies(nq);
  std::vector<bool> active(nq, true);
  std::vector<SolveResult> results(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    results[i].quantity = queries[i].quantity;
    results[i].n = n;
    results[i].pattern = queries[i].pattern.name;
    if (queries[i].quantity == Quantity::bal && queries[i].pattern.e == 1) {
      results[i].degenerate = true;
      results[i].note = "degenerate: every copy is balanced";
      active[i] = false;
      continue;
    }
    copies[i] = cached_copies(queries[i].pattern, n);
  }

  const EdgeSet all = EdgeSet::prefix(choose2(n));
  const auto tasks = partition_roots(n, opt.force);
  std::vector<std::vector<detail::Best>> per_task(tasks.size(), std::vector<detail::Best>(nq));
  std::vector<long long> scanned(tasks.size(), 0);
  std::vector<std::atomic<int>> global(nq);
  for (auto& g : global) g.store(-1);

  run_tasks(tasks, opt.jobs, [&](std::size_t ti, const ClassTask& task) {
    auto& best = per_task[ti];
    for_each_in_subtree(task, n, [&](const Graph& g) {
      ++scanned[ti];
      EdgeSet red = g.edge_set();
      if (opt.complements) red = red ^ all;
      const int r = red.count();
      for (std::size_t i = 0; i < nq; ++i) {
        if (!active[i]) continue;
        const int s = statistic(queries[i].quantity, r, n);
        // Ties in an earlier task must still be found, so the shared bound is strict.
        if (s <= best[i].value || s < global[i].load(std::memory_order_relaxed)) continue;
        if (!avoids_target(queries[i].quantity, red, *copies[i])) continue;
        best[i].value = s;
        best[i].witness = Graph::from_edge_set(n, red);
        int cur = global[i].load(std::memory_order_relaxed);
        while (s > cur && !global[i].compare_exchange_weak(cur, s)) {
        }
      }
    });
  });

  long long total = 0;
  for (long long c : scanned) total += c;
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (std::size_t i = 0; i < nq; ++i) {
    results[i].elapsed_ms = ms;
    if (!active[i]) continue;
    results[i].classes_scanned = total;
    detail::Best winner;
    for (const auto& b : per_task)
      if (b[i].value > winner.value) winner = b[i];
    results[i].value = winner.value;
    results[i].witness_graph6 = emit_graph6(canonical_relabelling(winner.witness));
  }
  return results;
}

inline SolveResult solve(Quantity q, int n, const Pattern& p, const SolveOptions& opt = {}) {
  return solve_many(n, {Query{q, p}}, opt).front();
}

inline SolveResult bal_exact(int n, const Pattern& p, const SolveOptions& opt = {}) {
  return solve(Quantity::bal, n, p, opt);
}

inline SolveResult sbal_exact(int n, const Pattern& p, const SolveOptions& opt = {}) {
  return solve(Quantity::sbal, n, p, opt);
}

inline SolveResult ot_exact(int n, const Pattern& p, const SolveOptions& opt = {}) {
  return solve(Quantity::ot, n, p, opt);
}

// Random red sets with min{|R|,|B|} > value; counts those avoiding the target.
struct SoundnessReport {
  long long samples = 0;
  long long violations = 0;
  std::string first_violation;  // graph6 of a red graph, if any
};

inline SoundnessReport sample_soundness(Quantity q, int n, const Pattern& p, int value, long long samples,
                                        std::uint64_t seed = 0x5eed) {
  detail::check_query(Query{q, p}, n);
  SoundnessReport rep;
  const int m = choose2(n);
  const int lo = value + 1;
  const int hi = q == Quantity::ex ? m : m - value - 1;
  if (lo > hi) return rep;
  const auto copies = cached_copies(p, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_count(lo, hi);
  std::vector<int> slots(m);
  for (int i = 0; i < m; ++i) slots[i] = i;
  for (long long s = 0; s < samples; ++s) {
    const int r = pick_count(rng);
    for (int i = 0; i < r; ++i) std::swap(slots[i], slots[std::uniform_int_distribution<int>(i, m - 1)(rng)]);
    EdgeSet red;
    for (int i = 0; i < r; ++i) red.set(slots[i]);
    ++rep.samples;
    if (avoids_target(q, red, *copies)) {
      if (rep.violations++ == 0) rep.first_violation = emit_graph6(Graph::from_edge_set(n, red));
    }
  }
  return rep;
}

struct ThresholdReport {
  Quantity quantity = Quantity::bal;
  int n = 0;
  std::string pattern;
  int claimed = 0;
  bool witness_ok = false;
  std::string witness_graph6;
  int witness_statistic = 0;
  bool witness_avoids = false;
  bool scan_ok = false;
  std::string mode;  // exhaustive | sampled
  long long scanned = 0;
  std::string counterexample;  // graph6 of an avoiding red graph beating the claim
  bool passed() const noexcept { return witness_ok && scan_ok; }
};

// Splits a claimed value into its lower bound (the witness avoids the target
// and attains the claim) and its upper bound (nothing above the claim avoids).
inline ThresholdReport verify_threshold(int n, const Pattern& p, Quantity q, int claimed, const Colouring& witness,
                                        const SolveOptions& opt = {}, long long samples = 10'000) {
  detail::check_query(Query{q, p}, n);
  if (witness.order() != n) throw invalid_argument("verify_threshold: witness host size differs from n");
  ThresholdReport rep;
  rep.quantity = q;
  rep.n = n;
  rep.pattern = p.name;
  rep.claimed = claimed;
  const auto copies = cached_copies(p, n);
  rep.witness_graph6 = emit_graph6(witness.red_graph());
  rep.witness_statistic = statistic(q, witness.red_count(), n);
  rep.witness_avoids = avoids_target(q, witness.red(), *copies);
  rep.witness_ok = rep.witness_avoids && rep.witness_statistic == claimed;

  bool exhaustive = true;
  try {
    detail::check_class_budget(n, opt);
  } catch (const budget_error&) {
    exhaustive = false;
  }
  if (exhaustive) {
    rep.mode = "exhaustive";
    const EdgeSet all = EdgeSet::prefix(choose2(n));
    const auto tasks = partition_roots(n, opt.force);
    std::vector<long long> scanned(tasks.size(), 0);
    std::vector<std::string> found(tasks.size());
    run_tasks(tasks, opt.jobs, [&](std::size_t ti, const ClassTask& task) {
      for_each_in_subtree(task, n, [&](const Graph& g) {
        ++scanned[ti];
        if (!found[ti].empty()) return;
        EdgeSet red = g.edge_set();
        if (opt.complements) red = red ^ all;
        if (statistic(q, red.count(), n) <= claimed) return;
        if (avoids_target(q, red, *copies)) found[ti] = emit_graph6(canonical_relabelling(g));
      });
    });
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      rep.scanned += scanned[i];
      if (rep.counterexample.empty() && !found[i].empty()) rep.counterexample = found[i];
    }
  } else {
    rep.mode = "sampled";
    const SoundnessReport s = sample_soundness(q, n, p, claimed, samples);
    rep.scanned = s.samples;
    rep.counterexample = s.first_violation;
  }
  rep.scan_ok = rep.counterexample.empty();
  return rep;
}

}  // namespace balancelab
