#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balancelab/canonical.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph.hpp"

namespace balancelab {

// A small pattern graph G without isolated vertices.
struct Pattern {
  std::string name;
  Graph graph;
  int v = 0;          // vertex count
  int e = 0;          // edge count
  long long aut = 0;  // automorphism group order
  bool bipartite = false;
  CanonicalKey key;
};

inline Pattern make_pattern(std::string name, const Graph& g) {
  if (g.size() == 0) throw invalid_argument("pattern " + name + ": no edges");
  if (g.non_isolated() != VertexMask((1u << g.order()) - 1u))
    throw invalid_argument("pattern " + name + ": has isolated vertices");
  Pattern p;
  p.name = std::move(name);
  p.graph = g;
  p.v = g.order();
  p.e = g.size();
  p.aut = count_automorphisms(g);
  p.bipartite = g.is_bipartite();
  p.key = canonical_form(g);
  return p;
}

namespace detail {

struct CatalogueEntry {
  const char* name;
  int v;
  std::vector<std::pair<int, int>> edges;
  std::vector<const char*> aliases;  // normalised spellings
};

inline const std::vector<CatalogueEntry>& catalogue_entries() {
  static const std::vector<CatalogueEntry> entries = {
      {"2K2", 4, {{0, 1}, {2, 3}}, {"2k2"}},
      {"P3", 3, {{0, 1}, {1, 2}}, {"p3", "k12"}},
      {"3K2", 6, {{0, 1}, {2, 3}, {4, 5}}, {"3k2"}},
      {"P3+K2", 5, {{0, 1}, {1, 2}, {3, 4}}, {"p3+k2", "k2+p3", "k12+k2", "k2+k12"}},
      {"P4", 4, {{0, 1}, {1, 2}, {2, 3}}, {"p4"}},
      {"K3", 3, {{0, 1}, {1, 2}, {0, 2}}, {"k3", "c3"}},
      {"K13", 4, {{0, 1}, {0, 2}, {0, 3}}, {"k13", "claw"}},
      {"4K2", 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {"4k2"}},
      {"2K2+P3", 7, {{0, 1}, {2, 3}, {4, 5}, {5, 6}}, {"2k2+p3", "2k2+k12", "p3+2k2", "k12+2k2"}},
      {"2P3", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {"2p3", "2k12", "p3+p3", "k12+k12"}},
      {"K2+P4", 6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}, {"k2+p4", "p4+k2"}},
      {"P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {"p5"}},
      {"chair", 5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {"chair", "fork", "k13withextendedleaf"}},
      {"K2+K3", 5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}, {"k2+k3", "k3+k2"}},
      {"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {"c4", "k22"}},
      {"K13+K2", 6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}, {"k13+k2", "k2+k13"}},
      {"K14", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {"k14"}},
      {"K3+e", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, {"k3+e", "paw"}},
  };
  return entries;
}

// Lower-case, "∪" as "+", and braces, commas, underscores and spaces dropped,
// so "K_{1,3} ∪ K_2" and "k13+k2" agree.
inline std::string normalise_name(std::string_view raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 3, "\xE2\x88\xAA") == 0) {
      s.push_back('+');
      i += 2;
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c == '_' || c == '{' || c == '}' || c == ',' || std::isspace(c)) continue;
    s.push_back(static_cast<char>(std::tolower(c)));
  }
  return s;
}

inline std::optional<int> parse_count(std::string_view digits) {
  if (digits.empty() || digits.size() > 2) return std::nullopt;
  int x = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    x = x * 10 + (c - '0');
  }
  return x;
}

}  // namespace detail

inline Pattern matching_pattern(int t) {
  if (t < 1 || 2 * t > max_vertices) throw invalid_argument("matching tK2 needs 1 <= t <= 8");
  Graph g(2 * t);
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return make_pattern(std::to_string(t) + "K2", g);
}

inline Pattern star_pattern(int k) {
  if (k < 1 || k + 1 > max_vertices) throw invalid_argument("star K1,k needs 1 <= k <= 15");
  Graph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return make_pattern("K1" + std::to_string(k), g);
}

inline Pattern path_pattern(int vertices) {
  if (vertices < 2 || vertices > max_vertices) throw invalid_argument("path Pk needs 2 <= k <= 16");
  Graph g(vertices);
  for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
  return make_pattern("P" + std::to_string(vertices), g);
}

// The 18 graphs with two to four edges and no isolated vertices.
inline const std::vector<Pattern>& catalogue() {
  static const std::vector<Pattern> patterns = [] {
    std::vector<Pattern> out;
    for (const auto& entry : detail::catalogue_entries())
      out.push_back(make_pattern(entry.name, Graph::from_edges(entry.v, entry.edges)));
    return out;
  }();
  return patterns;
}

inline std::string catalogue_names() {
  std::string s;
  for (const auto& p : catalogue()) s += (s.empty() ? "" : ", ") + p.name;
  return s;
}

// Catalogue name of the pattern isomorphic to `key`, if any.
inline std::optional<std::string> catalogue_name_of(const CanonicalKey& key) {
  for (const auto& p : catalogue())
    if (p.key == key) return p.name;
  return std::nullopt;
}

// Case-insensitive lookup over catalogue names and aliases, then the
// parametric families tK2, K1k (star with k leaves) and Pk.
inline Pattern pattern_lookup(std::string_view name) {
  const std::string key = detail::normalise_name(name);
  const auto& entries = detail::catalogue_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (detail::normalise_name(entries[i].name) == key) return catalogue()[i];
    for (const char* alias : entries[i].aliases)
      if (key == alias) return catalogue()[i];
  }
  try {
    if (key == "k2") return matching_pattern(1);
    if (key.size() >= 3 && key.ends_with("k2"))
      if (auto t = detail::parse_count(std::string_view(key).substr(0, key.size() - 2))) return matching_pattern(*t);
    if (key.size() >= 3 && key.starts_with("k1"))
      if (auto k = detail::parse_count(std::string_view(key).substr(2))) return star_pattern(*k);
    if (key.size() >= 2 && key.front() == 'p')
      if (auto k = detail::parse_count(std::string_view(key).substr(1))) return path_pattern(*k);
  } catch (const invalid_argument& e) {
    throw lookup_error("unknown pattern '" + std::string(name) + "': " + e.what());
  }
  throw lookup_error("unknown pattern '" + std::string(name) + "'; valid names: " + catalogue_names() +
                     " (plus tK2, K1k, Pk)");
}

inline Pattern disjoint_union(const Pattern& a, const Pattern& b) {
  Graph g = a.graph.disjoint_union(b.graph);
  CanonicalKey key = canonical_form(g);
  std::string name = catalogue_name_of(key).value_or(a.name + "+" + b.name);
  return make_pattern(std::move(name), g);
}

}  // namespace balancelab
