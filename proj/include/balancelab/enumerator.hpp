#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "balancelab/canonical.hpp"
#include "balancelab/errors.hpp"
#include "balancelab/graph.hpp"

namespace balancelab {

// Isomorph-free generation of all graphs on n vertices by canonical
// augmentation: a graph on k+1 vertices is produced from its parent on k
// vertices by adding vertex k, with the neighbourhood taken up to the
// parent's automorphisms, and is kept only if vertex k lies in the orbit of
// a canonically chosen vertex.

inline constexpr int enumeration_budget_n = 11;

// Known numbers of isomorphism classes, n = 0..11.
inline constexpr long long known_class_counts[] = {1,      1,        2,         4,           11, 34, 156, 1044,
                                                   12346, 274668, 12005168, 1018997864};

inline void check_enumeration_budget(int n, bool force = false) {
  if (n < 1 || n > max_vertices) throw invalid_argument("enumerate_classes: n must be 1..16");
  if (n > enumeration_budget_n && !force)
    throw budget_error("enumerate_classes: n = " + std::to_string(n) + " exceeds the limit n <= " +
                       std::to_string(enumeration_budget_n) + " (override with --force)");
}

// A node of the augmentation tree with generators of its automorphism group.
struct ClassTask {
  Graph root;
  std::vector<Permutation> generators;
};

namespace detail {

inline VertexMask apply_permutation(VertexMask s, const Permutation& p) noexcept {
  VertexMask out = 0;
  for (; s; s &= VertexMask(s - 1)) out |= VertexMask(1u << p[std::countr_zero(s)]);
  return out;
}

// The least subset of each orbit of subsets of {0..k-1} under the group.
inline void subset_orbit_reps(int k, const std::vector<Permutation>& gens, std::vector<VertexMask>& reps,
                              std::vector<std::uint8_t>& seen, std::vector<VertexMask>& stack) {
  const std::uint32_t total = 1u << k;
  reps.clear();
  if (gens.empty()) {
    reps.reserve(total);
    for (std::uint32_t s = 0; s < total; ++s) reps.push_back(VertexMask(s));
    return;
  }
  seen.assign(total, 0);
  for (std::uint32_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    reps.push_back(VertexMask(s));
    seen[s] = 1;
    stack.assign(1, VertexMask(s));
    while (!stack.empty()) {
      const VertexMask x = stack.back();
      stack.pop_back();
      for (const Permutation& g : gens) {
        const VertexMask y = apply_permutation(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
}

inline std::uint32_t vertex_invariant(const Graph& g, int v) noexcept {
  std::uint32_t sum = 0;
  for (VertexMask w = g.neighbours(v); w; w &= VertexMask(w - 1)) sum += g.degree(std::countr_zero(w));
  return (std::uint32_t(g.degree(v)) << 8) | sum;
}

// Decides whether the last vertex of `child` is its canonical new vertex.
// On acceptance, fills `gens` with automorphism generators when asked.
inline bool accept_child(const Graph& child, bool need_generators, std::vector<Permutation>& gens) {
  const int n = child.order();
  const int last = n - 1;
  const int d = child.degree(last);
  for (int v = 0; v < last; ++v)
    if (child.degree(v) > d) return false;

  std::uint32_t best = 0;
  VertexMask top = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint32_t key = vertex_invariant(child, v);
    if (key > best || v == 0) {
      best = key;
      top = VertexMask(1u << v);
    } else if (key == best) {
      top |= VertexMask(1u << v);
    }
  }
  if (!((top >> last) & 1u)) return false;
  if (std::popcount(top) == 1) {
    if (need_generators) gens = canonical_labelling(child).generators;
    else gens.clear();
    return true;
  }
  CanonicalResult r = canonical_labelling(child);
  int chosen = -1;
  for (VertexMask w = top; w; w &= VertexMask(w - 1)) {
    const int v = std::countr_zero(w);
    if (chosen < 0 || r.position[v] < r.position[chosen]) chosen = v;
  }
  if (r.orbit[chosen] != r.orbit[last]) return false;
  gens = std::move(r.generators);
  return true;
}

struct AcceptAll {
  bool operator()(const Graph&) const noexcept { return true; }
};

template <class Visit, class Keep>
void extend(const Graph& g, const std::vector<Permutation>& gens, int target, Visit& visit, Keep& keep) {
  if (g.order() == target) {
    visit(g);
    return;
  }
  const int k = g.order();
  const bool last_level = k + 1 == target;
  std::vector<VertexMask> reps, stack;
  std::vector<std::uint8_t> seen;
  subset_orbit_reps(k, gens, reps, seen, stack);
  std::vector<Permutation> child_gens;
  for (VertexMask s : reps) {
    const Graph child = g.with_vertex(s);
    if (!accept_child(child, !last_level, child_gens)) continue;
    if (!keep(child)) continue;
    extend(child, child_gens, target, visit, keep);
  }
}

}  // namespace detail

// Visits one representative per isomorphism class of graphs on n vertices, in
// a fixed order. `keep` may cut subtrees: a node on k < n vertices failing it
// is not extended, so it must be a hereditary (vertex-deletion closed) property
// for the visited set to stay complete within that property.
template <class Visit, class Keep>
void for_each_class(int n, Visit&& visit, Keep&& keep, bool force = false) {
  check_enumeration_budget(n, force);
  const Graph seed(1);
  if (!keep(seed)) return;
  detail::extend(seed, {}, n, visit, keep);
}

template <class Visit>
void for_each_class(int n, Visit&& visit, bool force = false) {
  detail::AcceptAll all;
  for_each_class(n, visit, all, force);
}

inline std::vector<Graph> enumerate_classes(int n, bool force = false) {
  std::vector<Graph> out;
  for_each_class(n, [&](const Graph& g) { out.push_back(g); }, force);
  return out;
}

inline int default_split_depth(int n) { return std::max(1, n - 2); }

// The augmentation tree nodes at `depth` vertices, in generation order. The
// subtrees below them partition the classes on n >= depth vertices.
inline std::vector<ClassTask> partition_roots(int n, int depth, bool force = false) {
  check_enumeration_budget(n, force);
  if (depth < 1 || depth > n) throw invalid_argument("partition_roots: need 1 <= depth <= n");
  std::vector<ClassTask> roots;
  // Generators are needed for each root, so recompute them at the split level.
  for_each_class(
      depth, [&](const Graph& g) { roots.push_back({g, canonical_labelling(g).generators}); }, force);
  return roots;
}

inline std::vector<ClassTask> partition_roots(int n, bool force = false) {
  return partition_roots(n, default_split_depth(n), force);
}

template <class Visit, class Keep>
void for_each_in_subtree(const ClassTask& task, int n, Visit&& visit, Keep&& keep) {
  if (!keep(task.root)) return;
  detail::extend(task.root, task.generators, n, visit, keep);
}

template <class Visit>
void for_each_in_subtree(const ClassTask& task, int n, Visit&& visit) {
  detail::AcceptAll all;
  for_each_in_subtree(task, n, visit, all);
}

// Runs fn(index, task) for every task on `jobs` threads. Tasks are claimed in
// order from a shared counter; the first exception is rethrown.
template <class Fn>
void run_tasks(const std::vector<ClassTask>& tasks, int jobs, Fn&& fn) {
  if (jobs < 1) throw invalid_argument("jobs must be at least 1");
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        fn(i, tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

inline long long count_classes(int n, int jobs = 1, bool force = false) {
  if (jobs <= 1) {
    check_enumeration_budget(n, force);
    long long count = 0;
    for_each_class(n, [&](const Graph&) { ++count; }, force);
    return count;
  }
  const auto tasks = partition_roots(n, force);
  std::vector<long long> counts(tasks.size(), 0);
  run_tasks(tasks, jobs, [&](std::size_t i, const ClassTask& t) {
    for_each_in_subtree(t, n, [&](const Graph&) { ++counts[i]; });
  });
  long long total = 0;
  for (long long c : counts) total += c;
  return total;
}

}  // namespace balancelab
