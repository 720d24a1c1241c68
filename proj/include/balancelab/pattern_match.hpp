#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "balancelab/canonical.hpp"
#include "balancelab/colouring.hpp"
#include "balancelab/edge_set.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/pattern.hpp"

namespace balancelab {

inline constexpr long long copy_list_budget = 20'000'000;

// C(n,v) * v! / aut: the number of subgraphs of K_n isomorphic to p.
inline long long expected_copy_count(const Pattern& p, int n) {
  if (n < p.v) return 0;
  long long f = 1;
  for (int i = 2; i <= p.v; ++i) f *= i;
  return binomial(n, p.v) * (f / p.aut);
}

// Every subgraph of K_n isomorphic to the pattern, one edge mask per copy.
class CopyList {
 public:
  CopyList(Pattern pattern, int n, std::vector<EdgeSet> masks)
      : pattern_(std::move(pattern)), n_(n), masks_(std::move(masks)) {}

  const Pattern& pattern() const noexcept { return pattern_; }
  int host_order() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }
  const std::vector<EdgeSet>& masks() const noexcept { return masks_; }

 private:
  Pattern pattern_;
  int n_;
  std::vector<EdgeSet> masks_;
};

namespace detail {

// Copies of p in K_v that use all v vertices, as edge lists. Edge subsets are
// grown in increasing index order with the pattern's maximum degree as a cap.
inline std::vector<std::vector<VertexPair>> spanning_copies(const Pattern& p) {
  const int v = p.v;
  const int slots = choose2(v);
  const int cap = p.graph.max_degree();
  const std::vector<int> want = p.graph.degree_sequence();
  const VertexMask all = VertexMask((1u << v) - 1u);

  std::vector<std::vector<VertexPair>> out;
  std::vector<VertexPair> chosen;
  std::array<int, max_vertices> deg{};
  auto grow = [&](auto&& self, int next, VertexMask touched) -> void {
    const int have = static_cast<int>(chosen.size());
    if (have == p.e) {
      if (touched != all) return;
      Graph g(v);
      for (auto [a, b] : chosen) g.add_edge(a, b);
      if (g.degree_sequence() != want || canonical_form(g) != p.key) return;
      out.push_back(chosen);
      return;
    }
    // Each remaining edge touches at most two new vertices.
    const int uncovered = v - std::popcount(touched);
    if (2 * (p.e - have) < uncovered) return;
    for (int i = next; i + (p.e - have) <= slots; ++i) {
      auto [a, b] = edge_endpoints(i);
      if (deg[a] == cap || deg[b] == cap) continue;
      ++deg[a];
      ++deg[b];
      chosen.push_back({a, b});
      self(self, i + 1, VertexMask(touched | (1u << a) | (1u << b)));
      chosen.pop_back();
      --deg[a];
      --deg[b];
    }
  };
  grow(grow, 0, 0);
  return out;
}

}  // namespace detail

inline CopyList enumerate_copies(const Pattern& p, int n) {
  if (n < 1 || n > max_vertices) throw invalid_argument("enumerate_copies: host size must be 1..16");
  if (n < p.v) return CopyList(p, n, {});
  const long long expected = expected_copy_count(p, n);
  if (expected > copy_list_budget)
    throw budget_error("enumerate_copies: " + std::to_string(expected) + " copies of " + p.name + " in K_" +
                       std::to_string(n) + " exceeds the limit of " + std::to_string(copy_list_budget));

  const auto spans = detail::spanning_copies(p);
  std::vector<EdgeSet> masks;
  masks.reserve(static_cast<std::size_t>(expected));
  std::array<int, max_vertices> pick{};
  for (int i = 0; i < p.v; ++i) pick[i] = i;
  const int v = p.v;
  for (;;) {
    for (const auto& edges : spans) {
      EdgeSet m;
      for (auto [a, b] : edges) m.set(edge_index_unchecked(pick[a], pick[b]));
      masks.push_back(m);
    }
    int i = v - 1;
    while (i >= 0 && pick[i] == n - v + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < v; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(masks.begin(), masks.end());
  return CopyList(p, n, std::move(masks));
}

// Shared, immutable copy lists keyed by (pattern, host size).
inline std::shared_ptr<const CopyList> cached_copies(const Pattern& p, int n) {
  static std::mutex lock;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const CopyList>> cache;
  const auto key = std::make_pair(p.key.hex(), n);
  {
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto list = std::make_shared<const CopyList>(enumerate_copies(p, n));
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(key, std::move(list)).first->second;
}

// Achieved red counts of copies of a pattern with e edges, as a bit set.
class ToneSpectrum {
 public:
  ToneSpectrum() = default;
  explicit ToneSpectrum(int e, std::uint32_t bits = 0) : e_(e), bits_(bits) {}

  int edges() const noexcept { return e_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool contains(int r) const noexcept { return r >= 0 && r <= e_ && ((bits_ >> r) & 1u); }
  void insert(int r) noexcept { bits_ |= 1u << r; }
  bool full() const noexcept { return bits_ == (1u << (e_ + 1)) - 1u; }
  bool has_balanced() const noexcept { return contains(e_ / 2) || contains((e_ + 1) / 2); }
  bool has_both_strong() const noexcept { return contains(e_ / 2) && contains((e_ + 1) / 2); }

  std::vector<int> tones() const {
    std::vector<int> out;
    for (int r = 0; r <= e_; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }

  ToneSpectrum swapped() const {
    ToneSpectrum s(e_);
    for (int r = 0; r <= e_; ++r)
      if (contains(r)) s.insert(e_ - r);
    return s;
  }

  std::string to_string() const {
    std::string s = "{";
    for (int r : tones()) s += (s.size() > 1 ? "," : "") + std::to_string(r);
    return s + "}";
  }

  friend bool operator==(const ToneSpectrum&, const ToneSpectrum&) = default;

 private:
  int e_ = 0;
  std::uint32_t bits_ = 0;
};

inline int tone_of(const EdgeSet& red, const EdgeSet& copy) noexcept { return (red & copy).count(); }

inline ToneSpectrum tone_spectrum(const EdgeSet& red, const CopyList& copies) {
  ToneSpectrum s(copies.pattern().e);
  for (const EdgeSet& m : copies.masks()) {
    s.insert(tone_of(red, m));
    if (s.full()) break;
  }
  return s;
}

inline bool has_tone(const EdgeSet& red, const CopyList& copies, int r) {
  for (const EdgeSet& m : copies.masks())
    if (tone_of(red, m) == r) return true;
  return false;
}

inline bool has_balanced(const EdgeSet& red, const CopyList& copies) {
  const int lo = copies.pattern().e / 2, hi = (copies.pattern().e + 1) / 2;
  for (const EdgeSet& m : copies.masks()) {
    const int r = tone_of(red, m);
    if (r == lo || r == hi) return true;
  }
  return false;
}

inline void check_host(const Colouring& c, const Pattern& p) {
  if (c.order() < p.v)
    throw invalid_argument("pattern " + p.name + " has " + std::to_string(p.v) + " vertices, host K_" +
                           std::to_string(c.order()) + " is too small");
}

inline ToneSpectrum tone_spectrum(const Colouring& c, const Pattern& p) {
  check_host(c, p);
  return tone_spectrum(c.red(), *cached_copies(p, c.order()));
}

inline bool has_tone(const Colouring& c, const Pattern& p, int r) {
  check_host(c, p);
  return has_tone(c.red(), *cached_copies(p, c.order()), r);
}

inline bool has_balanced(const Colouring& c, const Pattern& p) {
  check_host(c, p);
  return has_balanced(c.red(), *cached_copies(p, c.order()));
}

}  // namespace balancelab
