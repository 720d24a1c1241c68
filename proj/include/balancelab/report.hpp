#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "balancelab/amoeba.hpp"
#include "balancelab/checks.hpp"
#include "balancelab/solver.hpp"

namespace balancelab {

using json = nlohmann::json;

inline void to_json(json& j, const SolveResult& r) {
  j = json{{"quantity", quantity_name(r.quantity)},
           {"n", r.n},
           {"pattern", r.pattern},
           {"value", r.value},
           {"witness_graph6", r.witness_graph6},
           {"classes_scanned", r.classes_scanned},
           {"elapsed_ms", r.elapsed_ms},
           {"mode", r.mode},
           {"degenerate", r.degenerate}};
  if (!r.note.empty()) j["note"] = r.note;
}

inline void from_json(const json& j, SolveResult& r) {
  r.quantity = parse_quantity(j.at("quantity").get<std::string>());
  r.n = j.at("n").get<int>();
  r.pattern = j.at("pattern").get<std::string>();
  r.value = j.at("value").get<int>();
  r.witness_graph6 = j.at("witness_graph6").get<std::string>();
  r.classes_scanned = j.at("classes_scanned").get<long long>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.mode = j.at("mode").get<std::string>();
  r.degenerate = j.value("degenerate", false);
  r.note = j.value("note", std::string());
}

inline void to_json(json& j, const ThresholdReport& r) {
  j = json{{"quantity", quantity_name(r.quantity)},
           {"n", r.n},
           {"pattern", r.pattern},
           {"claimed", r.claimed},
           {"witness_graph6", r.witness_graph6},
           {"witness_statistic", r.witness_statistic},
           {"witness_avoids", r.witness_avoids},
           {"witness_ok", r.witness_ok},
           {"scan_ok", r.scan_ok},
           {"mode", r.mode},
           {"scanned", r.scanned},
           {"counterexample", r.counterexample},
           {"passed", r.passed()}};
}

inline void to_json(json& j, const UnionBoundReport& r) {
  j = json{{"g", r.g},         {"h", r.h},
           {"union", r.union_pattern}, {"n", r.n},
           {"ramsey", r.ramsey}, {"required_n", r.required_n},
           {"bal", r.bal},     {"ex_g", r.ex_g},
           {"ex_h", r.ex_h},   {"bound", r.bound},
           {"slack", r.slack}, {"holds", r.holds},
           {"witness_graph6", r.witness_graph6}, {"classes_scanned", r.classes_scanned},
           {"caveat", r.caveat}};
}

inline void to_json(json& j, const TripleReport& r) {
  json legs = json::array();
  for (const auto& l : r.legs)
    legs.push_back({{"quantity", l.quantity},
                    {"pattern", l.pattern},
                    {"value", l.value},
                    {"mode", l.mode},
                    {"witness_ok", l.witness_ok},
                    {"scanned", l.scanned}});
  j = json{{"t", r.t},
           {"n", r.n},
           {"legs", legs},
           {"erdos_gallai", r.erdos_gallai},
           {"all_equal", r.all_equal},
           {"equal_erdos_gallai", r.equal_erdos_gallai},
           {"theorem_from", r.theorem_from},
           {"mode", r.mode}};
}

inline void to_json(json& j, const ReachabilityReport& r) {
  j = json{{"pattern", r.pattern},
           {"n", r.n},
           {"copies", r.copies},
           {"components", r.components},
           {"connected", r.connected},
           {"replacement_edges", r.replacement_edges},
           {"endpoints_disjoint", r.endpoints_disjoint},
           {"from_graph6", r.from_graph6},
           {"to_graph6", r.to_graph6}};
  j["path_length"] = r.path_length ? json(*r.path_length) : json(nullptr);
}

inline void to_json(json& j, const ObstructionReport& r) {
  j = json{{"type", r.type == BalancedType::A ? "A" : "B"},
           {"n", r.n},
           {"t", r.t},
           {"red_graph6", r.red_graph6},
           {"red", r.red},
           {"blue", r.blue},
           {"spectrum", r.spectrum.tones()},
           {"avoids", r.avoids}};
}

}  // namespace balancelab
