#pragma once

#include <algorithm>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "balancelab/amoeba.hpp"
#include "balancelab/cache.hpp"
#include "balancelab/checks.hpp"
#include "balancelab/colouring.hpp"
#include "balancelab/enumerator.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/oracles.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"
#include "balancelab/report.hpp"
#include "balancelab/solver.hpp"
#include "balancelab/table.hpp"

namespace balancelab::cli {

enum Exit { ok = 0, mismatch = 1, usage = 2, budget = 3 };

namespace detail {

struct Common {
  bool as_json = false;
  int jobs = 1;
  long long budget = -1;
  std::string cache_path;
  bool force = false;

  SolveOptions options() const {
    SolveOptions o;
    o.jobs = jobs;
    o.force = force;
    o.class_budget = budget;
    return o;
  }

  std::unique_ptr<ResultCache> open_cache() const {
    const std::string path = ResultCache::resolve_path(cache_path);
    if (path.empty()) return nullptr;
    return std::make_unique<ResultCache>(path);
  }
};

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.as_json, "Machine-readable output");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--budget", c.budget, "Refuse scans needing more classes than this");
  sub->add_option("--cache", c.cache_path, "Results cache file (JSON lines)");
  sub->add_flag("--force", c.force, "Override the enumeration size limit");
}

inline std::string edge_list(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

inline std::string fmt_opt(const std::optional<long long>& v) { return v ? std::to_string(*v) : "-"; }

inline void print_table(std::ostream& out, const VerifyTableReport& rep) {
  out << "table " << rep.table << "\n";
  out << std::left << std::setw(9) << "pattern" << std::setw(6) << "qty" << std::setw(18) << "claim"
      << std::setw(20) << "valid" << std::setw(4) << "n" << std::setw(10) << "expected" << std::setw(10)
      << "computed" << std::setw(17) << "status" << "detail\n";
  for (const auto& r : rep.rows)
    out << std::left << std::setw(9) << r.pattern << std::setw(6) << r.quantity << std::setw(18) << r.expression
        << std::setw(20) << r.validity << std::setw(4) << r.n << std::setw(10) << fmt_opt(r.expected)
        << std::setw(10) << fmt_opt(r.computed) << std::setw(17) << r.status << r.detail << "\n";
  out << "totals:";
  for (const auto& [k, v] : rep.totals) out << " " << k << "=" << v;
  out << "\n";
}

}  // namespace detail

// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact balance, strong balance and omnitonal numbers of small graphs", "balancelab"};
  // --h names the second Ramsey pattern, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  detail::Common common;

  int n = 0;
  std::string pattern, quantity_text, red, kind, g_name, h_name;
  std::optional<int> t;
  bool count_only = false;
  int table = 0;
  long long samples = 10'000;
  std::vector<std::string> overrides;
  std::string cache_action = "stats";

  auto* exact = app.add_subcommand("exact", "Exact bal / sbal / ot by exhaustive class scan");
  exact->add_option("--quantity", quantity_text, "bal, sbal or ot")->required();
  exact->add_option("--pattern", pattern, "Pattern name")->required();
  exact->add_option("--n", n, "Host size")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Tone spectrum of a red graph against a pattern");
  spectrum->add_option("--pattern", pattern)->required();
  spectrum->add_option("--red", red, "Red graph in graph6")->required();

  auto* constr = app.add_subcommand("construct", "Build a named colouring");
  constr->add_option("--kind", kind, "star, clique, bipartite, two-factor, erdos-gallai, from-red-graph")->required();
  constr->add_option("--n", n)->required();
  constr->add_option("--t", t);
  constr->add_option("--red", red, "Red graph in graph6 (from-red-graph)");

  auto* classes = app.add_subcommand("classes", "Isomorphism classes of graphs on n vertices");
  classes->add_option("--n", n)->required();
  classes->add_flag("--count-only", count_only);

  auto* turan = app.add_subcommand("turan", "Turan number by exhaustive scan");
  turan->add_option("--pattern", pattern)->required();
  turan->add_option("--n", n)->required();

  auto* ramsey = app.add_subcommand("ramsey", "Two-colour Ramsey number R(g,h)");
  ramsey->add_option("--g", g_name)->required();
  ramsey->add_option("--h", h_name)->required();

  auto* expected = app.add_subcommand("expected", "Tabulated value at n, if n is in the stated range");
  expected->add_option("--pattern", pattern)->required();
  expected->add_option("--quantity", quantity_text)->required();
  expected->add_option("--n", n)->required();

  auto* amoeba = app.add_subcommand("amoeba", "Edge-replacement connectivity of copies in K_n");
  amoeba->add_option("--pattern", pattern)->required();
  amoeba->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify-table", "Check a value table against the solvers");
  verify->add_option("--table", table)->required()->check(CLI::Range(1, 3));
  verify->add_option("--samples", samples, "Random colourings per sampled row");
  verify->add_option("--row-n", overrides, "Per-row host size, PATTERN=N");

  auto* unionb = app.add_subcommand("union", "Union bound check bal(n,G+H) <= max ex");
  unionb->add_option("--g", g_name)->required();
  unionb->add_option("--h", h_name)->required();
  unionb->add_option("--n", n)->required();

  auto* triple = app.add_subcommand("triple", "Matching triple probe");
  triple->add_option("--t", t)->required();
  triple->add_option("--n", n)->required();

  auto* cache = app.add_subcommand("cache", "Inspect or check the results cache");
  cache->add_option("action", cache_action, "stats, list, verify or clear")
      ->check(CLI::IsMember({"stats", "list", "verify", "clear"}));

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) detail::add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage;
  }

  const bool js = common.as_json;
  const SolveOptions opt = common.options();
  try {
    if (*exact) {
      const Quantity q = parse_quantity(quantity_text);
      if (q == Quantity::ex) throw invalid_argument("use the turan subcommand for ex");
      const Pattern p = pattern_lookup(pattern);
      auto store = common.open_cache();
      const SolveResult r = solve_cached(n, {Query{q, p}}, opt, store.get()).front();
      if (js) out << json(r).dump(2) << "\n";
      else {
        out << quantity_name(q) << "(" << n << "," << p.name << ") = " << r.value << "\n";
        out << "witness " << r.witness_graph6 << "\n";
        out << "classes " << r.classes_scanned << " (" << r.mode << "), " << std::fixed << std::setprecision(1)
            << r.elapsed_ms << " ms\n";
        if (!r.note.empty()) out << r.note << "\n";
      }
      return ok;
    }
    if (*spectrum) {
      const Pattern p = pattern_lookup(pattern);
      const Graph g = parse_graph6(red);
      const ToneSpectrum s = tone_spectrum(Colouring::from_red_graph(g), p);
      if (js)
        out << json{{"pattern", p.name}, {"n", g.order()}, {"e", p.e}, {"tones", s.tones()},
                    {"balanced", s.has_balanced()}}
                   .dump(2)
            << "\n";
      else out << s.to_string() << "\n";
      return ok;
    }
    if (*constr) {
      const auto k = parse_construction(kind);
      if (!k) throw invalid_argument("unknown construction '" + kind + "'");
      std::optional<Graph> given;
      if (!red.empty()) given = parse_graph6(red);
      const Colouring c = construct(*k, n, t, given ? &*given : nullptr);
      const Graph rg = c.red_graph();
      if (js) {
        json edges = json::array();
        for (auto [u, v] : rg.edges()) edges.push_back({u, v});
        out << json{{"kind", kind}, {"n", n}, {"red_edges", edges}, {"red", c.red_count()},
                    {"blue", c.blue_count()}, {"graph6", emit_graph6(rg)}}
                   .dump(2)
            << "\n";
      } else {
        out << "red " << detail::edge_list(rg) << "\n";
        out << "|R| = " << c.red_count() << ", |B| = " << c.blue_count() << "\n";
        out << "graph6 " << emit_graph6(rg) << "\n";
      }
      return ok;
    }
    if (*classes) {
      if (count_only) {
        const long long c = count_classes(n, common.jobs, common.force);
        if (js) out << json{{"n", n}, {"classes", c}}.dump() << "\n";
        else out << c << "\n";
      } else {
        for_each_class(n, [&](const Graph& g) { out << emit_graph6(canonical_relabelling(g)) << "\n"; }, common.force);
      }
      return ok;
    }
    if (*turan) {
      const Pattern p = pattern_lookup(pattern);
      const SolveResult r = turan_solve(n, p, opt);
      if (js) out << json(r).dump(2) << "\n";
      else out << "ex(" << n << "," << p.name << ") = " << r.value << "\nextremal " << r.witness_graph6 << "\n";
      return ok;
    }
    if (*ramsey) {
      const Pattern g = pattern_lookup(g_name), h = pattern_lookup(h_name);
      const RamseyResult r = ramsey_exact(g, h, opt);
      if (js)
        out << json{{"g", g.name}, {"h", h.name}, {"value", r.value}, {"witness_graph6", r.witness_graph6},
                    {"classes_scanned", r.classes_scanned}}
                   .dump(2)
            << "\n";
      else out << "R(" << g.name << "," << h.name << ") = " << r.value << "\navoider " << r.witness_graph6 << "\n";
      return ok;
    }
    if (*expected) {
      const Pattern p = pattern_lookup(pattern);
      const Quantity q = parse_quantity(quantity_text);
      const auto claim = find_claim(p, q);
      const auto v = registry_expected(p, q, n);
      if (js) {
        json j{{"pattern", p.name}, {"quantity", quantity_name(q)}, {"n", n}};
        j["value"] = v ? json(*v) : json(nullptr);
        if (claim) {
          j["expression"] = claim->expression();
          j["validity"] = claim->validity();
          j["anchor"] = claim->anchor;
        }
        out << j.dump(2) << "\n";
      } else if (v) {
        out << *v << "\n";
      } else {
        out << "absent";
        if (claim) out << " (" << claim->expression() << ", " << claim->validity() << ")";
        else out << " (no tabulated row)";
        out << "\n";
      }
      return ok;
    }
    if (*amoeba) {
      const Pattern p = pattern_lookup(pattern);
      const ReachabilityReport r = amoeba_reachability(p, n);
      const bool cond = degree_condition(p);
      if (js) {
        json j = r;
        j["degree_condition"] = cond;
        out << j.dump(2) << "\n";
      } else {
        out << p.name << " in K_" << n << ": " << r.copies << " copies, " << r.components << " component"
            << (r.components == 1 ? "" : "s") << (r.connected ? " (connected)" : " (not connected)") << "\n";
        if (r.path_length)
          out << "replacement path " << r.from_graph6 << " -> " << r.to_graph6 << ": " << *r.path_length << " steps"
              << (r.endpoints_disjoint ? " (disjoint copies)" : "") << "\n";
        out << "degree condition " << (cond ? "holds" : "fails") << "\n";
      }
      return ok;
    }
    if (*verify) {
      TablePolicy policy;
      policy.samples = samples;
      policy.solve = opt;
      if (common.budget >= 0) policy.class_budget = common.budget;
      for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw invalid_argument("--row-n expects PATTERN=N, got '" + o + "'");
        policy.n_override[pattern_lookup(o.substr(0, eq)).name] = std::stoi(o.substr(eq + 1));
      }
      policy.solve.class_budget = -1;
      auto store = common.open_cache();
      policy.cache = store.get();
      const VerifyTableReport rep = verify_table(table, policy);
      if (js) out << json(rep).dump(2) << "\n";
      else detail::print_table(out, rep);
      return rep.ok() ? ok : mismatch;
    }
    if (*unionb) {
      const UnionBoundReport r = check_union_bound(pattern_lookup(g_name), pattern_lookup(h_name), n, opt);
      if (js) out << json(r).dump(2) << "\n";
      else {
        out << "bal(" << n << "," << r.union_pattern << ") = " << r.bal << " <= max{ex(" << n << "," << r.g
            << ") = " << r.ex_g << ", ex(" << n << "," << r.h << ") = " << r.ex_h << "} = " << r.bound << ": "
            << (r.holds ? "holds" : "FAILS") << " (slack " << r.slack << ")\n";
        out << "precondition n >= " << r.required_n << " with R = " << r.ramsey << "\n" << "note: " << r.caveat << "\n";
      }
      return r.holds ? ok : mismatch;
    }
    if (*triple) {
      const TripleReport r = check_triple(*t, n, opt, samples);
      if (js) out << json(r).dump(2) << "\n";
      else {
        for (const auto& l : r.legs)
          out << l.quantity << "(" << n << "," << l.pattern << ") = " << l.value << " [" << l.mode << "]\n";
        out << "Erdos-Gallai value " << r.erdos_gallai << "; legs equal: " << (r.all_equal ? "yes" : "no")
            << "; equal to formula: " << (r.equal_erdos_gallai ? "yes" : "no") << "\n";
        if (n < r.theorem_from) out << "note: stated range starts at n = " << r.theorem_from << "; recorded only\n";
      }
      return ok;
    }
    if (*cache) {
      auto store = common.open_cache();
      if (!store) throw invalid_argument("cache: give --cache <path> or set BALANCELAB_CACHE");
      if (cache_action == "clear") {
        store->clear();
        out << "cleared " << store->path() << "\n";
        return ok;
      }
      if (cache_action == "list") {
        for (const auto& e : store->entries()) out << ResultCache::entry_json(e).dump() << "\n";
        return ok;
      }
      if (cache_action == "verify") {
        // Recompute each entry and compare everything except timing.
        int bad = 0, checked = 0;
        for (const auto& e : store->entries()) {
          std::optional<Pattern> p;
          for (const auto& c : catalogue())
            if (c.key.hex() == e.pattern_key) p = c;
          if (!p) p = pattern_lookup(e.result.pattern);
          SolveResult fresh = solve(parse_quantity(e.quantity), e.n, *p, opt);
          SolveResult stored = e.result;
          fresh.elapsed_ms = stored.elapsed_ms = 0;
          fresh.pattern = stored.pattern;
          ++checked;
          if (json(fresh).dump() != json(stored).dump()) {
            ++bad;
            err << "stale entry: " << e.quantity << " " << e.result.pattern << " n=" << e.n << "\n";
          }
        }
        out << checked << " entries checked, " << bad << " differ\n";
        return bad ? mismatch : ok;
      }
      out << store->path() << ": " << store->size() << " entries (engine " << engine_version << ")\n";
      return ok;
    }
  } catch (const budget_error& e) {
    err << "budget: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace balancelab::cli
