#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balancelab/edge_set.hpp"
#include "balancelab/errors.hpp"

namespace balancelab {

using VertexMask = std::uint16_t;

// Simple undirected graph on at most 16 labelled vertices. Row v of the
// adjacency matrix is a bit mask of the neighbours of v.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw invalid_argument("Graph: vertex count " + std::to_string(n) + " outside 0..16");
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  static Graph from_edge_set(int n, const EdgeSet& edges) {
    Graph g(n);
    if (!edges.is_subset_of(EdgeSet::prefix(choose2(n))))
      throw invalid_argument("Graph: edge index outside K_" + std::to_string(n));
    edges.for_each([&](int i) {
      auto [u, v] = edge_endpoints(i);
      g.adj_[u] |= VertexMask(1u << v);
      g.adj_[v] |= VertexMask(1u << u);
    });
    return g;
  }

  static Graph complete(int n) { return from_edge_set(n, EdgeSet::prefix(choose2(n))); }

  int order() const noexcept { return n_; }

  int size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  VertexMask neighbours(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= VertexMask(1u << v);
    adj_[v] |= VertexMask(1u << u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= VertexMask(~(1u << v));
    adj_[v] &= VertexMask(~(1u << u));
  }

  int max_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const noexcept {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
  }

  VertexMask non_isolated() const noexcept {
    VertexMask m = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[v]) m |= VertexMask(1u << v);
    return m;
  }

  // Edge set under the colex indexing: row v contributes bits C(v,2)..C(v,2)+v-1.
  EdgeSet edge_set() const noexcept {
    EdgeSet s;
    for (int v = 1; v < n_; ++v) {
      std::uint64_t low = adj_[v] & ((1u << v) - 1u);
      if (low) s |= EdgeSet::placed(low, choose2(v));
    }
    return s;
  }

  Graph complement() const {
    Graph g(n_);
    VertexMask all = VertexMask((1u << n_) - 1u);
    for (int v = 0; v < n_; ++v) g.adj_[v] = VertexMask(all & ~adj_[v] & ~(1u << v));
    return g;
  }

  // Relabel: vertex v of this graph becomes vertex image[v].
  Graph permuted(std::span<const int> image) const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
      for (VertexMask w = adj_[v]; w; w &= VertexMask(w - 1))
        g.adj_[image[v]] |= VertexMask(1u << image[std::countr_zero(w)]);
    return g;
  }

  // This graph plus a new vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexMask nbrs) const {
    if (n_ >= max_vertices) throw invalid_argument("Graph: cannot exceed 16 vertices");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_[n_] = nbrs;
    for (VertexMask w = nbrs; w; w &= VertexMask(w - 1)) g.adj_[std::countr_zero(w)] |= VertexMask(1u << n_);
    return g;
  }

  // Disjoint union, this graph's vertices first.
  Graph disjoint_union(const Graph& other) const {
    if (n_ + other.n_ > max_vertices) throw invalid_argument("Graph: union exceeds 16 vertices");
    Graph g(n_ + other.n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = adj_[v];
    for (int v = 0; v < other.n_; ++v) g.adj_[n_ + v] = VertexMask(other.adj_[v] << n_);
    return g;
  }

  // Graph on the vertices of `keep`, renumbered in increasing order.
  Graph induced(VertexMask keep) const {
    std::array<int, max_vertices> pos{};
    int k = 0;
    for (int v = 0; v < n_; ++v)
      if ((keep >> v) & 1u) pos[v] = k++;
    Graph g(k);
    for (int v = 0; v < n_; ++v) {
      if (!((keep >> v) & 1u)) continue;
      for (VertexMask w = VertexMask(adj_[v] & keep); w; w &= VertexMask(w - 1))
        g.adj_[pos[v]] |= VertexMask(1u << pos[std::countr_zero(w)]);
    }
    return g;
  }

  bool is_bipartite() const {
    std::array<int, max_vertices> side;
    side.fill(-1);
    for (int s = 0; s < n_; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::array<int, max_vertices> queue{};
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int v = queue[head++];
        for (VertexMask w = adj_[v]; w; w &= VertexMask(w - 1)) {
          int u = std::countr_zero(w);
          if (side[u] < 0) {
            side[u] = 1 - side[v];
            queue[tail++] = u;
          } else if (side[u] == side[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    edge_set().for_each([&](int i) { out.push_back(edge_endpoints(i)); });
    return out;
  }

  const std::array<VertexMask, max_vertices>& rows() const noexcept { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw invalid_argument("Graph: bad vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }

  int n_ = 0;
  std::array<VertexMask, max_vertices> adj_{};
};

}  // namespace balancelab
