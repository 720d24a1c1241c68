#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "balancelab/errors.hpp"
#include "balancelab/graph6.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/pattern_match.hpp"

namespace balancelab {

inline constexpr long long amoeba_copy_budget = 1'000'000;

// Degree set equal to {1, ..., max degree}.
inline bool degree_condition(const Pattern& p) {
  const int top = p.graph.max_degree();
  std::uint32_t seen = 0;
  for (int v = 0; v < p.v; ++v) seen |= 1u << p.graph.degree(v);
  return seen == (((1u << top) - 1u) << 1);
}

struct ReachabilityReport {
  std::string pattern;
  int n = 0;
  long long copies = 0;
  long long components = 0;
  bool connected = false;
  long long replacement_edges = 0;      // unordered pairs of copies one replacement apart
  std::optional<int> path_length;       // between the sample endpoints, when connected
  bool endpoints_disjoint = false;      // the sample endpoints share no vertex
  std::string from_graph6, to_graph6;   // sample endpoints as subgraphs of K_n
};

namespace detail {

inline VertexMask support(const EdgeSet& m) {
  VertexMask s = 0;
  m.for_each([&](int i) {
    auto [u, v] = edge_endpoints(i);
    s |= VertexMask((1u << u) | (1u << v));
  });
  return s;
}

// Copies one edge replacement away from copy i. Membership in the sorted copy
// list is the isomorphism test: it holds exactly the subgraphs isomorphic to p.
inline std::vector<std::size_t> replacement_neighbours(const std::vector<EdgeSet>& masks, std::size_t i, int slots) {
  std::vector<std::size_t> out;
  const EdgeSet m = masks[i];
  m.for_each([&](int drop) {
    for (int add = 0; add < slots; ++add) {
      if (m.test(add)) continue;
      EdgeSet x = m;
      x.reset(drop);
      x.set(add);
      auto it = std::lower_bound(masks.begin(), masks.end(), x);
      if (it != masks.end() && *it == x) out.push_back(static_cast<std::size_t>(it - masks.begin()));
    }
  });
  return out;
}

}  // namespace detail

inline ReachabilityReport amoeba_reachability(const Pattern& p, int n) {
  if (n < p.v)
    throw precondition_error("amoeba: n = " + std::to_string(n) + " is smaller than v(" + p.name + ")");
  const long long expected = expected_copy_count(p, n);
  if (expected > amoeba_copy_budget)
    throw budget_error("amoeba: " + std::to_string(expected) + " copies exceed the limit of " +
                       std::to_string(amoeba_copy_budget));
  const CopyList list = enumerate_copies(p, n);
  const auto& masks = list.masks();
  const int slots = choose2(n);

  ReachabilityReport rep;
  rep.pattern = p.name;
  rep.n = n;
  rep.copies = static_cast<long long>(masks.size());

  std::vector<std::vector<std::size_t>> adj(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) adj[i] = detail::replacement_neighbours(masks, i, slots);
  long long arcs = 0;
  for (const auto& a : adj) arcs += static_cast<long long>(a.size());
  rep.replacement_edges = arcs / 2;

  std::vector<long long> comp(masks.size(), -1);
  for (std::size_t s = 0; s < masks.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = rep.components;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x])
        if (comp[y] < 0) {
          comp[y] = rep.components;
          q.push(y);
        }
    }
    ++rep.components;
  }
  rep.connected = rep.components == 1;
  if (masks.empty()) return rep;

  std::size_t target = masks.size() - 1;
  const VertexMask s0 = detail::support(masks[0]);
  for (std::size_t i = 1; i < masks.size(); ++i)
    if ((detail::support(masks[i]) & s0) == 0) {
      target = i;
      rep.endpoints_disjoint = true;
      break;
    }
  rep.from_graph6 = emit_graph6(Graph::from_edge_set(n, masks[0]));
  rep.to_graph6 = emit_graph6(Graph::from_edge_set(n, masks[target]));
  if (rep.connected) {
    std::vector<int> dist(masks.size(), -1);
    std::queue<std::size_t> q;
    q.push(0);
    dist[0] = 0;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    rep.path_length = dist[target];
  }
  return rep;
}

}  // namespace balancelab
