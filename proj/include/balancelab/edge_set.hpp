#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "balancelab/errors.hpp"

namespace balancelab {

inline constexpr int max_vertices = 16;
inline constexpr int max_edge_slots = 120;  // C(16,2)

constexpr int choose2(int n) noexcept { return n * (n - 1) / 2; }

constexpr long long binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Colexicographic pair index: {u,v} with u < v maps to C(v,2) + u.
// Adding vertex n appends the indices C(n,2) .. C(n,2)+n-1.
constexpr int edge_index_unchecked(int u, int v) noexcept { return choose2(v) + u; }

inline int edge_index(int u, int v, int n) {
  if (n < 0 || n > max_vertices)
    throw invalid_argument("edge_index: vertex count " + std::to_string(n) + " outside 0..16");
  if (u < 0 || v >= n || u >= v)
    throw invalid_argument("edge_index: need 0 <= u < v < n, got u=" + std::to_string(u) +
                           " v=" + std::to_string(v) + " n=" + std::to_string(n));
  return edge_index_unchecked(u, v);
}

struct VertexPair {
  int u;
  int v;
  friend constexpr bool operator==(VertexPair, VertexPair) = default;
};

constexpr VertexPair edge_endpoints(int index) noexcept {
  int v = 1;
  while (choose2(v + 1) <= index) ++v;
  return {index - choose2(v), v};
}

// A set of edge indices of K_16 packed into two 64-bit words.
class EdgeSet {
 public:
  constexpr EdgeSet() noexcept = default;
  constexpr EdgeSet(std::uint64_t lo, std::uint64_t hi) noexcept : lo_(lo), hi_(hi) {}

  static constexpr EdgeSet single(int index) noexcept {
    EdgeSet s;
    s.set(index);
    return s;
  }

  // Bits [0, count).
  static constexpr EdgeSet prefix(int count) noexcept {
    if (count <= 0) return {};
    if (count < 64) return {(std::uint64_t{1} << count) - 1, 0};
    if (count == 64) return {~std::uint64_t{0}, 0};
    if (count < 128) return {~std::uint64_t{0}, (std::uint64_t{1} << (count - 64)) - 1};
    return {~std::uint64_t{0}, ~std::uint64_t{0}};
  }

  // `bits` (at most 16 wide) placed starting at bit `offset`.
  static constexpr EdgeSet placed(std::uint64_t bits, int offset) noexcept {
    if (offset >= 64) return {0, bits << (offset - 64)};
    if (offset == 0) return {bits, 0};
    return {bits << offset, bits >> (64 - offset)};
  }

  constexpr bool test(int i) const noexcept {
    return i < 64 ? (lo_ >> i) & 1u : (hi_ >> (i - 64)) & 1u;
  }
  constexpr void set(int i) noexcept {
    if (i < 64) lo_ |= std::uint64_t{1} << i;
    else hi_ |= std::uint64_t{1} << (i - 64);
  }
  constexpr void reset(int i) noexcept {
    if (i < 64) lo_ &= ~(std::uint64_t{1} << i);
    else hi_ &= ~(std::uint64_t{1} << (i - 64));
  }
  constexpr void flip(int i) noexcept {
    if (i < 64) lo_ ^= std::uint64_t{1} << i;
    else hi_ ^= std::uint64_t{1} << (i - 64);
  }

  constexpr int count() const noexcept { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool empty() const noexcept { return (lo_ | hi_) == 0; }
  constexpr bool is_subset_of(const EdgeSet& o) const noexcept {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }

  constexpr std::uint64_t lo() const noexcept { return lo_; }
  constexpr std::uint64_t hi() const noexcept { return hi_; }

  constexpr EdgeSet operator&(const EdgeSet& o) const noexcept { return {lo_ & o.lo_, hi_ & o.hi_}; }
  constexpr EdgeSet operator|(const EdgeSet& o) const noexcept { return {lo_ | o.lo_, hi_ | o.hi_}; }
  constexpr EdgeSet operator^(const EdgeSet& o) const noexcept { return {lo_ ^ o.lo_, hi_ ^ o.hi_}; }
  constexpr EdgeSet& operator|=(const EdgeSet& o) noexcept {
    lo_ |= o.lo_;
    hi_ |= o.hi_;
    return *this;
  }
  constexpr EdgeSet& operator&=(const EdgeSet& o) noexcept {
    lo_ &= o.lo_;
    hi_ &= o.hi_;
    return *this;
  }
  constexpr EdgeSet& operator^=(const EdgeSet& o) noexcept {
    lo_ ^= o.lo_;
    hi_ ^= o.hi_;
    return *this;
  }

  // Ascending visit of member indices.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w; w &= w - 1) f(std::countr_zero(w));
    for (std::uint64_t w = hi_; w; w &= w - 1) f(64 + std::countr_zero(w));
  }

  friend constexpr bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend constexpr auto operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept {
    std::uint64_t h = s.lo() * 0x9E3779B97F4A7C15ull ^ (s.hi() + 0x632BE59BD9B4E019ull);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace balancelab
