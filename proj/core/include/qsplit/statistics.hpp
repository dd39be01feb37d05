#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsplit/catalog.hpp"
#include "qsplit/types.hpp"

namespace qsplit {

inline constexpr size_t kMcvEntries = 10;        // K_mcv
inline constexpr size_t kHistogramBuckets = 20;  // B

struct ColumnStats {
  uint64_t n_distinct = 0;
  // (value, frequency) sorted by descending frequency, value ascending on
  // ties; at most kMcvEntries entries; frequencies are exact fractions.
  std::vector<std::pair<Value, double>> mcv;
  // Equi-depth bucket boundaries over the non-MCV values, int64 columns only.
  // kHistogramBuckets buckets need boundaries.size() == buckets + 1.
  std::vector<int64_t> histogram;
  std::optional<Value> min_value;
  std::optional<Value> max_value;

  double mcv_total_frequency() const;
  bool is_mcv(const Value& v) const;
};

struct TableStats {
  uint64_t row_count = 0;
  std::map<std::string, ColumnStats> columns;
  bool exact = false;

  const ColumnStats* column(const std::string& name) const {
    auto it = columns.find(name);
    return it == columns.end() ? nullptr : &it->second;
  }
};

// Full-scan statistics: exact row count, exact per-column distinct counts,
// exact MCV frequencies, equi-depth histogram over the non-MCV values.
TableStats analyze(const StoredRelation& relation);

// Frequency of `value` under MCV + uniform remainder.
double frequency(const ColumnStats& stats, const Value& value);

// Fraction of the column's rows with value <= bound (int64 columns).
double fraction_le(const ColumnStats& stats, int64_t bound);

// Per-session statistics registry: static stats for base relations, runtime
// stats for materialized results. Runtime entries override static ones.
class StatsRegistry {
 public:
  void put(const std::string& relation, TableStats stats) {
    stats_[relation] = std::move(stats);
  }
  const TableStats* find(const std::string& relation) const {
    auto it = stats_.find(relation);
    return it == stats_.end() ? nullptr : &it->second;
  }
  void erase(const std::string& relation) { stats_.erase(relation); }

 private:
  std::map<std::string, TableStats> stats_;
};

// Runs analyze on a freshly materialized subquery result and registers the
// result, so later optimizer calls see exact statistics for it.
const TableStats& collect_runtime_stats(const StoredRelation& m, StatsRegistry& registry);

}  // namespace qsplit
