#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "balancelab/graph.hpp"

namespace balancelab {

// lab[i] is the vertex placed at position i of an ordered discrete partition.
using Labelling = std::array<std::uint8_t, max_vertices>;
// perm[v] is the image of vertex v.
using Permutation = std::array<std::uint8_t, max_vertices>;

// Adjacency rows of the canonically relabelled graph. Equal keys iff isomorphic.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  CanonicalKey(int n, const std::array<VertexMask, max_vertices>& rows) : n_(n), rows_(rows) {}

  int order() const noexcept { return n_; }
  const std::array<VertexMask, max_vertices>& rows() const noexcept { return rows_; }

  // One byte of vertex count, then each row big-endian.
  std::vector<std::uint8_t> bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(1 + 2 * n_);
    out.push_back(static_cast<std::uint8_t>(n_));
    for (int i = 0; i < n_; ++i) {
      out.push_back(static_cast<std::uint8_t>(rows_[i] >> 8));
      out.push_back(static_cast<std::uint8_t>(rows_[i] & 0xFF));
    }
    return out;
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (std::uint8_t b : bytes()) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 15]);
    }
    return s;
  }

  Graph graph() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if ((rows_[u] >> v) & 1u) g.add_edge(u, v);
    return g;
  }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  int n_ = 0;
  std::array<VertexMask, max_vertices> rows_{};
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(k.order());
    for (int i = 0; i < k.order(); ++i) h = (h ^ k.rows()[i]) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

struct CanonicalResult {
  Labelling lab{};       // canonical position -> vertex
  Labelling position{};  // vertex -> canonical position
  CanonicalKey key;
  std::vector<Permutation> generators;        // generate the automorphism group
  std::array<std::uint8_t, max_vertices> orbit{};  // least vertex of each vertex's orbit
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t x) noexcept {
  h ^= x + 0x9E3779B97F4A7C15ull;
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  return h ^ (h >> 31);
}

struct Partition {
  std::array<VertexMask, max_vertices> cell{};
  int cells = 0;
};

// Splits cells by neighbour counts into each splitter until the partition is
// equitable. Fragments are ordered by count, so the result and the returned
// trace are invariant under relabelling.
inline std::uint64_t refine(const Graph& g, Partition& p, std::array<VertexMask, 64>& queue, int qlen) {
  const auto& adj = g.rows();
  std::uint64_t trace = 0x5bd1e995u;
  int head = 0;
  while (head < qlen) {
    const VertexMask w = queue[head++];
    for (int ci = 0; ci < p.cells;) {
      const VertexMask x = p.cell[ci];
      if ((x & (x - 1)) == 0) {
        ++ci;
        continue;
      }
      std::array<VertexMask, max_vertices + 1> bucket{};
      int lo = max_vertices + 1, hi = -1;
      for (VertexMask m = x; m; m &= VertexMask(m - 1)) {
        int v = std::countr_zero(m);
        int c = std::popcount(VertexMask(adj[v] & w));
        bucket[c] |= VertexMask(1u << v);
        lo = c < lo ? c : lo;
        hi = c > hi ? c : hi;
      }
      if (lo == hi) {
        trace = mix64(trace, (std::uint64_t(ci) << 8) | std::uint64_t(lo));
        ++ci;
        continue;
      }
      std::array<VertexMask, max_vertices> frag{};
      std::array<int, max_vertices> fcount{};
      int k = 0;
      for (int c = lo; c <= hi; ++c)
        if (bucket[c]) {
          frag[k] = bucket[c];
          fcount[k] = c;
          ++k;
        }
      for (int j = p.cells - 1; j > ci; --j) p.cell[j + k - 1] = p.cell[j];
      for (int j = 0; j < k; ++j) {
        p.cell[ci + j] = frag[j];
        queue[qlen++] = frag[j];
        trace = mix64(trace, (std::uint64_t(ci + j) << 16) | (std::uint64_t(fcount[j]) << 8) |
                                 std::uint64_t(std::popcount(frag[j])));
      }
      p.cells += k - 1;
      ci += k;
    }
  }
  return mix64(trace, std::uint64_t(p.cells));
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalResult run(std::span<const VertexMask> initial_cells) {
    Partition root;
    std::array<VertexMask, 64> queue{};
    int q = 0;
    for (VertexMask c : initial_cells) {
      if (!c) continue;
      root.cell[root.cells++] = c;
      queue[q++] = c;
    }
    cur_trace_[0] = refine(g_, root, queue, q);
    if (n_ > 0) dfs(root, 0, true, 1);
    return finish();
  }

 private:
  static constexpr int no_jump = 1 << 20;

  using Code = std::array<VertexMask, max_vertices>;

  Code code_of(const Labelling& lab) const {
    Labelling pos{};
    for (int i = 0; i < n_; ++i) pos[lab[i]] = std::uint8_t(i);
    Code code{};
    const auto& adj = g_.rows();
    for (int i = 0; i < n_; ++i) {
      VertexMask row = 0;
      for (VertexMask m = adj[lab[i]]; m; m &= VertexMask(m - 1))
        row |= VertexMask(1u << pos[std::countr_zero(m)]);
      code[i] = row;
    }
    return code;
  }

  static int compare_codes(const Code& a, const Code& b, int n) {
    for (int i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // Records gamma with gamma(from[i]) = to[i]; returns the level at which the
  // two paths diverge when gamma maps one path onto the other, else no_jump.
  int record_automorphism(const Labelling& from, const Labelling& to, const std::array<std::uint8_t, max_vertices>& from_path,
                          int depth) {
    Permutation gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (identity) return no_jump;
    generators_.push_back(gamma);
    int k = 0;
    while (k < depth && from_path[k] == cur_path_[k]) ++k;
    for (int i = 0; i < depth; ++i)
      if (gamma[from_path[i]] != cur_path_[i]) return no_jump;
    return k;
  }

  // cmp orders the current path against the best one: -1 less, 0 equal so
  // far, 1 greater.
  int leaf(const Partition& p, int depth, bool eq_first, int cmp) {
    Labelling lab{};
    for (int i = 0; i < n_; ++i) lab[i] = std::uint8_t(std::countr_zero(p.cell[i]));
    Code code = code_of(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_trace_ = best_trace_ = cur_trace_;
      first_path_ = best_path_ = cur_path_;
      first_depth_ = best_depth_ = depth;
      ++best_version_;
      return no_jump;
    }
    if (eq_first && depth == first_depth_ && compare_codes(code, first_code_, n_) == 0)
      return record_automorphism(first_lab_, lab, first_path_, depth);
    int c = cmp != 0 ? cmp : (depth != best_depth_ ? (depth > best_depth_ ? 1 : -1) : compare_codes(code, best_code_, n_));
    if (c > 0) {
      best_lab_ = lab;
      best_code_ = code;
      best_trace_ = cur_trace_;
      best_path_ = cur_path_;
      best_depth_ = depth;
      ++best_version_;
      return no_jump;
    }
    if (c == 0) return record_automorphism(best_lab_, lab, best_path_, depth);
    return no_jump;
  }

  // Orbits of the stored automorphisms that fix path[0..depth) pointwise.
  void stabiliser_orbits(int depth, std::array<std::uint8_t, max_vertices>& root) const {
    std::iota(root.begin(), root.end(), std::uint8_t{0});
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const Permutation& gamma : generators_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[cur_path_[i]] == cur_path_[i];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) root[a > b ? a : b] = std::uint8_t(a < b ? a : b);
      }
    }
    for (int x = 0; x < n_; ++x) root[x] = std::uint8_t(find(x));
  }

  int dfs(const Partition& p, int depth, bool eq_first, int cmp) {
    if (p.cells == n_) return leaf(p, depth, eq_first, cmp);

    int ci = 0;
    while ((p.cell[ci] & (p.cell[ci] - 1)) == 0) ++ci;
    const VertexMask target = p.cell[ci];

    int local_cmp = cmp;
    unsigned version = best_version_;
    std::size_t orbit_gens = ~std::size_t{0};
    std::array<std::uint8_t, max_vertices> orbit{};
    VertexMask tried = 0;
    VertexMask tried_orbits = 0;

    for (VertexMask rest = target; rest; rest &= VertexMask(rest - 1)) {
      const int v = std::countr_zero(rest);
      if (generators_.size() != orbit_gens) {
        stabiliser_orbits(depth, orbit);
        orbit_gens = generators_.size();
        tried_orbits = 0;
        for (VertexMask m = tried; m; m &= VertexMask(m - 1))
          tried_orbits |= VertexMask(1u << orbit[std::countr_zero(m)]);
      }
      if ((tried_orbits >> orbit[v]) & 1u) continue;
      tried |= VertexMask(1u << v);
      tried_orbits |= VertexMask(1u << orbit[v]);

      Partition child = p;
      for (int j = child.cells - 1; j > ci; --j) child.cell[j + 1] = child.cell[j];
      child.cell[ci] = VertexMask(1u << v);
      child.cell[ci + 1] = VertexMask(target & ~(1u << v));
      ++child.cells;
      std::array<VertexMask, 64> queue{};
      queue[0] = VertexMask(1u << v);
      const std::uint64_t trace = refine(g_, child, queue, 1);

      cur_path_[depth] = std::uint8_t(v);
      cur_trace_[depth + 1] = trace;

      // A new best can only come from below this node, so it shares the prefix.
      if (best_version_ != version) {
        if (local_cmp > 0) local_cmp = 0;
        version = best_version_;
      }
      bool child_eq_first =
          eq_first && (!have_leaf_ || (depth + 1 <= first_depth_ && trace == first_trace_[depth + 1]));
      int child_cmp = have_leaf_ ? local_cmp : 1;
      if (child_cmp == 0) {
        if (depth + 1 > best_depth_ || trace > best_trace_[depth + 1]) child_cmp = 1;
        else if (trace < best_trace_[depth + 1]) child_cmp = -1;
      }
      if (child_cmp < 0 && !child_eq_first) continue;
      int j = dfs(child, depth + 1, child_eq_first, child_cmp);
      if (j < depth) return j;
    }
    return no_jump;
  }

  CanonicalResult finish() const {
    CanonicalResult r;
    r.lab = best_lab_;
    for (int i = 0; i < n_; ++i) r.position[best_lab_[i]] = std::uint8_t(i);
    r.key = CanonicalKey(n_, best_code_);
    r.generators = generators_;
    std::array<std::uint8_t, max_vertices> root{};
    std::iota(root.begin(), root.end(), std::uint8_t{0});
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const Permutation& gamma : generators_)
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) root[a > b ? a : b] = std::uint8_t(a < b ? a : b);
      }
    for (int x = 0; x < n_; ++x) r.orbit[x] = std::uint8_t(find(x));
    return r;
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  unsigned best_version_ = 0;
  Labelling first_lab_{}, best_lab_{};
  Code first_code_{}, best_code_{};
  std::array<std::uint64_t, max_vertices + 1> first_trace_{}, best_trace_{}, cur_trace_{};
  std::array<std::uint8_t, max_vertices> first_path_{}, best_path_{}, cur_path_{};
  int first_depth_ = 0, best_depth_ = 0;
  std::vector<Permutation> generators_;
};

}  // namespace detail

// Canonical labelling of g, optionally respecting an ordered vertex colouring
// given as a list of cells (vertices in earlier cells get earlier positions).
inline CanonicalResult canonical_labelling(const Graph& g, std::span<const VertexMask> cells) {
  return detail::CanonSearch(g).run(cells);
}

inline CanonicalResult canonical_labelling(const Graph& g) {
  const VertexMask all = VertexMask((1u << g.order()) - 1u);
  return canonical_labelling(g, std::span<const VertexMask>(&all, 1));
}

inline CanonicalKey canonical_form(const Graph& g) { return canonical_labelling(g).key; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// The graph relabelled so that vertex lab[i] becomes i.
inline Graph canonical_relabelling(const Graph& g) { return canonical_form(g).graph(); }

// Counts automorphisms by backtracking over degree-preserving partial maps.
inline long long count_automorphisms(const Graph& g) {
  const int n = g.order();
  std::array<int, max_vertices> image{};
  image.fill(-1);
  long long count = 0;
  auto extend = [&](auto&& self, int v, VertexMask used) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      if (g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      self(self, v + 1, VertexMask(used | (1u << w)));
    }
  };
  extend(extend, 0, 0);
  return count;
}

}  // namespace balancelab
