#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "balancelab/edge_set.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph.hpp"

namespace balancelab {

// Red/blue colouring of E(K_n), stored as the red edge set under the colex
// edge indexing. Every other edge is blue.
class Colouring {
 public:
  Colouring() = default;

  Colouring(int n, const EdgeSet& red) : n_(n), red_(red) {
    if (n < 1 || n > max_vertices) throw invalid_argument("Colouring: host size must be 1..16");
    if (!red.is_subset_of(all_edges()))
      throw invalid_argument("Colouring: red edge outside K_" + std::to_string(n));
  }

  static Colouring from_red_graph(const Graph& red) { return Colouring(red.order(), red.edge_set()); }

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return choose2(n_); }
  const EdgeSet& red() const noexcept { return red_; }
  EdgeSet blue() const noexcept { return red_ ^ all_edges(); }
  int red_count() const noexcept { return red_.count(); }
  int blue_count() const noexcept { return edge_count() - red_count(); }
  int min_class() const noexcept {
    const int r = red_count(), b = blue_count();
    return r < b ? r : b;
  }

  bool is_red(int u, int v) const { return red_.test(edge_index(u < v ? u : v, u < v ? v : u, n_)); }

  Graph red_graph() const { return Graph::from_edge_set(n_, red_); }
  Graph blue_graph() const { return Graph::from_edge_set(n_, blue()); }
  int red_degree(int v) const { return red_graph().degree(v); }
  VertexMask red_neighbours(int v) const { return red_graph().neighbours(v); }

  // Exchange the colours.
  Colouring swapped() const { return Colouring(n_, blue()); }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  EdgeSet all_edges() const noexcept { return EdgeSet::prefix(choose2(n_)); }

  int n_ = 1;
  EdgeSet red_;
};

enum class Construction { star, clique, bipartite, two_factor, erdos_gallai, from_red_graph };

inline std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::star: return "star";
    case Construction::clique: return "clique";
    case Construction::bipartite: return "bipartite";
    case Construction::two_factor: return "two-factor";
    case Construction::erdos_gallai: return "erdos-gallai";
    case Construction::from_red_graph: return "from-red-graph";
  }
  return "?";
}

inline std::optional<Construction> parse_construction(std::string_view name) {
  for (Construction c : {Construction::star, Construction::clique, Construction::bipartite, Construction::two_factor,
                         Construction::erdos_gallai, Construction::from_red_graph})
    if (construction_name(c) == name) return c;
  return std::nullopt;
}

// Red sets, distinguished vertices at the lowest labels:
//   star          all edges at vertex 0                         |R| = n-1
//   clique        K_t on 0..t-1                                 |R| = C(t,2)
//   bipartite     all edges between {0..t-1} and the rest       |R| = t(n-t)
//   two-factor    Hamilton cycle 0-1-...-(n-1)-0                |R| = n
//   erdos-gallai  every edge meeting {0..t-2}                   |R| = C(t-1,2)+(t-1)(n-t+1)
inline Colouring construct(Construction kind, int n, std::optional<int> t = std::nullopt,
                           const Graph* red = nullptr) {
  if (kind == Construction::from_red_graph) {
    if (!red) throw invalid_argument("from-red-graph needs a red graph");
    if (red->order() != n) throw invalid_argument("from-red-graph: red graph order differs from n");
    return Colouring::from_red_graph(*red);
  }
  if (n < 1 || n > max_vertices) throw invalid_argument("construct: n must be 1..16");
  auto need_t = [&]() {
    if (!t) throw invalid_argument(std::string(construction_name(kind)) + " needs parameter t");
    if (*t < 1 || *t >= n)
      throw invalid_argument(std::string(construction_name(kind)) + ": need 1 <= t < n, got t=" +
                             std::to_string(*t));
    return *t;
  };
  Graph g(n);
  switch (kind) {
    case Construction::star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case Construction::clique: {
      const int k = need_t();
      for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
      break;
    }
    case Construction::bipartite: {
      const int k = need_t();
      for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v) g.add_edge(u, v);
      break;
    }
    case Construction::two_factor:
      if (n < 3) throw invalid_argument("two-factor needs n >= 3");
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      break;
    case Construction::erdos_gallai: {
      const int k = need_t();
      for (int u = 0; u + 1 < k; ++u)
        for (int v = 0; v < n; ++v)
          if (v != u) g.add_edge(u, v);
      break;
    }
    case Construction::from_red_graph:
      break;
  }
  return Colouring::from_red_graph(g);
}

enum class BalancedType { A, B };

// Least t with |R| = |B| for the type-A(t) (red K_t) or type-B(t)
// (red K_{t,n-t}) colouring of K_n.
inline std::optional<int> find_balanced_type(BalancedType type, int n) {
  if (n < 2) throw invalid_argument("find_balanced_type: n must be at least 2");
  const int total = choose2(n);
  if (total % 2) return std::nullopt;
  for (int t = 1; t < n; ++t) {
    const int r = type == BalancedType::A ? choose2(t) : t * (n - t);
    if (2 * r == total) return t;
  }
  return std::nullopt;
}

}  // namespace balancelab
