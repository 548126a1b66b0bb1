#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pcycle/bundle.hpp"
#include "pcycle/metrics.hpp"

namespace pcycle {

/// Receives reported bundles. `shard` identifies the reporting worker; one
/// shard is never used by two threads at the same time, so implementations
/// only need per-shard storage.
class CycleSink {
 public:
  virtual ~CycleSink() = default;
  /// Called once before a run with the number of shards it will use.
  virtual void prepare(std::size_t shards) = 0;
  virtual void on_bundle(std::size_t shard, const BundleView& b, std::uint64_t count) = 0;
};

class CountingSink final : public CycleSink {
 public:
  void prepare(std::size_t shards) override;
  void on_bundle(std::size_t shard, const BundleView& b, std::uint64_t count) override;

  std::uint64_t cycles() const;
  std::uint64_t bundles() const;
  /// Cycle length -> number of cycles.
  std::map<std::size_t, std::uint64_t> histogram() const;

 private:
  struct alignas(64) Shard {
    std::uint64_t cycles = 0, bundles = 0;
    std::vector<std::uint64_t> by_length;
  };
  std::vector<Shard> shards_;
};

/// Stores every cycle in canonical form plus the raw bundles.
class CollectingSink final : public CycleSink {
 public:
  explicit CollectingSink(Mode mode, bool nondecreasing = false) : mode_(mode), nondecreasing_(nondecreasing) {}
  void prepare(std::size_t shards) override;
  void on_bundle(std::size_t shard, const BundleView& b, std::uint64_t count) override;

  /// Sorted canonical cycles (duplicates kept, so double reports show up).
  std::vector<CycleRecord> cycles() const;
  std::vector<CycleBundle> bundles() const;

 private:
  struct alignas(64) Shard {
    std::vector<CycleRecord> cycles;
    std::vector<CycleBundle> bundles;
  };
  Mode mode_;
  bool nondecreasing_;
  std::vector<Shard> shards_;
};

/// Applies bundle counting, the bundles on/off switch and cycle counters
/// before forwarding to the user sink.
class Reporter {
 public:
  Reporter(const Constraints& c, bool bundles, CycleSink* sink) : c_(c), bundles_(bundles), sink_(sink) {}
  void report(std::size_t shard, CounterShard& counters, const BundleView& b) const;

 private:
  const Constraints& c_;
  bool bundles_;
  CycleSink* sink_;
};

}  // namespace pcycle
