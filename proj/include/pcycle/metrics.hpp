#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Build with PCYCLE_NO_COUNTERS to compile visit counting out of the hot paths.
#ifdef PCYCLE_NO_COUNTERS
#define PCYCLE_COUNT(stmt) ((void)0)
#else
#define PCYCLE_COUNT(stmt) (stmt)
#endif

namespace pcycle {

struct VisitCounters {
  std::uint64_t edge_visits = 0;
  std::uint64_t vertex_visits = 0;
  std::uint64_t unblock_calls = 0;
  std::uint64_t dfs_calls = 0;

  VisitCounters& operator+=(const VisitCounters& o);
  friend bool operator==(const VisitCounters&, const VisitCounters&) = default;
};

struct MetricsSnapshot {
  VisitCounters visits;
  std::uint64_t tasks_spawned = 0;
  std::uint64_t tasks_stolen = 0;
  std::uint64_t cycles_reported = 0;
  std::uint64_t bundles_reported = 0;
  std::vector<std::uint64_t> busy_ns;  // one entry per worker
  std::uint64_t wall_ns = 0;

  friend bool operator==(const MetricsSnapshot&, const MetricsSnapshot&) = default;
};

/// Sums counters and per-worker busy time; wall time takes the maximum.
MetricsSnapshot merge(const MetricsSnapshot& a, const MetricsSnapshot& b);

/// Coefficient of variation (stddev / mean) of per-worker busy time.
double busy_time_cv(const MetricsSnapshot& m);

enum class ExportFormat { json, csv };

/// JSON: one object with a fixed field order. CSV: a counter table followed
/// by one "worker,busy_ns" row per worker.
std::string export_metrics(const MetricsSnapshot& m, ExportFormat f);

/// Per-worker counter shard, padded to avoid false sharing.
struct alignas(64) CounterShard {
  VisitCounters visits;
  std::uint64_t cycles = 0;
  std::uint64_t bundles = 0;
  std::uint64_t tasks = 0;
  std::uint64_t steals = 0;
};

}  // namespace pcycle
