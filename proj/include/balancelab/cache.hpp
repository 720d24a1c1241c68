#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "balancelab/errors.hpp"
#include "balancelab/pattern.hpp"
#include "balancelab/report.hpp"
#include "balancelab/solver.hpp"

namespace balancelab {

inline constexpr const char* engine_version = "balancelab-1";

struct CacheEntry {
  std::string quantity;
  std::string pattern_key;  // canonical key in hex
  int n = 0;
  std::string engine;
  SolveResult result;
  std::string created;
};

// Append-only JSON-lines store of solver results keyed by
// (quantity, pattern canonical key, n, engine version).
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

  // BALANCELAB_CACHE wins over the given path.
  static std::string resolve_path(const std::string& given) {
    if (const char* env = std::getenv("BALANCELAB_CACHE"); env && *env) return env;
    return given;
  }

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const {
    std::lock_guard<std::mutex> g(lock_);
    return entries_.size();
  }

  std::optional<SolveResult> lookup(Quantity q, const Pattern& p, int n) const {
    std::lock_guard<std::mutex> g(lock_);
    auto it = entries_.find(key(q, p, n));
    if (it == entries_.end()) return std::nullopt;
    return it->second.result;
  }

  void store(const Pattern& p, const SolveResult& r) {
    CacheEntry e;
    e.quantity = std::string(quantity_name(r.quantity));
    e.pattern_key = p.key.hex();
    e.n = r.n;
    e.engine = engine_version;
    e.result = r;
    e.created = now_utc();
    std::lock_guard<std::mutex> g(lock_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw invalid_argument("cache: cannot write " + path_);
    out << entry_json(e).dump() << '\n';
    entries_[key(r.quantity, p, r.n)] = e;
  }

  std::vector<CacheEntry> entries() const {
    std::lock_guard<std::mutex> g(lock_);
    std::vector<CacheEntry> out;
    for (const auto& [k, e] : entries_) out.push_back(e);
    return out;
  }

  void clear() {
    std::lock_guard<std::mutex> g(lock_);
    entries_.clear();
    std::ofstream(path_, std::ios::trunc);
  }

  static json entry_json(const CacheEntry& e) {
    return json{{"quantity", e.quantity}, {"pattern_key", e.pattern_key}, {"n", e.n},
                {"engine", e.engine},     {"result", e.result},           {"created", e.created}};
  }

 private:
  using Key = std::tuple<std::string, std::string, int, std::string>;

  static Key key(Quantity q, const Pattern& p, int n) {
    return {std::string(quantity_name(q)), p.key.hex(), n, engine_version};
  }

  static std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::parse_error& e) {
        throw parse_error("cache " + path_ + " line " + std::to_string(lineno) + ": " + e.what(), e.byte);
      }
      CacheEntry e;
      e.quantity = j.at("quantity").get<std::string>();
      e.pattern_key = j.at("pattern_key").get<std::string>();
      e.n = j.at("n").get<int>();
      e.engine = j.at("engine").get<std::string>();
      e.result = j.at("result").get<SolveResult>();
      e.created = j.value("created", std::string());
      if (e.engine != engine_version) continue;
      entries_[Key{e.quantity, e.pattern_key, e.n, e.engine}] = e;
    }
  }

  std::string path_;
  mutable std::mutex lock_;
  std::map<Key, CacheEntry> entries_;
};

// solve_many that answers from the cache where it can and records new results.
inline std::vector<SolveResult> solve_cached(int n, const std::vector<Query>& queries, const SolveOptions& opt,
                                             ResultCache* cache) {
  if (!cache || opt.complements) return solve_many(n, queries, opt);
  std::vector<SolveResult> out(queries.size());
  std::vector<Query> missing;
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (auto hit = cache->lookup(queries[i].quantity, queries[i].pattern, n)) {
      out[i] = *hit;
      out[i].pattern = queries[i].pattern.name;
    } else {
      missing.push_back(queries[i]);
      slot.push_back(i);
    }
  }
  if (missing.empty()) return out;
  auto fresh = solve_many(n, missing, opt);
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    cache->store(missing[k].pattern, fresh[k]);
    out[slot[k]] = fresh[k];
  }
  return out;
}

}  // namespace balancelab
