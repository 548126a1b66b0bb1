#pragma once

// Pieces shared by the parallel drivers.

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "pcycle/metrics.hpp"
#include "pcycle/runtime.hpp"

namespace pcycle::detail {

/// Per-worker free lists of reusable O(n) objects. Objects are acquired and
/// released on the same worker thread.
template <class T>
class WorkerPool {
 public:
  WorkerPool(int workers, std::function<std::unique_ptr<T>()> make)
      : free_(static_cast<std::size_t>(workers)), make_(std::move(make)) {}

  T* acquire() {
    auto& fl = free_[static_cast<std::size_t>(Scheduler::current_worker())].items;
    if (fl.empty()) return create();
    T* t = fl.back();
    fl.pop_back();
    return t;
  }
  void release(T* t) { free_[static_cast<std::size_t>(Scheduler::current_worker())].items.push_back(t); }

 private:
  T* create() {
    auto obj = make_();
    T* raw = obj.get();
    std::lock_guard lk(mu_);
    all_.push_back(std::move(obj));
    return raw;
  }
  struct alignas(64) FreeList {
    std::vector<T*> items;
  };
  std::vector<FreeList> free_;
  std::function<std::unique_ptr<T>()> make_;
  std::mutex mu_;
  std::vector<std::unique_ptr<T>> all_;
};

inline std::uint64_t now_ns() {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now().time_since_epoch())
                                        .count());
}

inline MetricsSnapshot collect_metrics(const std::vector<CounterShard>& shards, const RuntimeStats& st,
                                       std::uint64_t wall_ns) {
  MetricsSnapshot m;
  for (const auto& s : shards) {
    m.visits += s.visits;
    m.cycles_reported += s.cycles;
    m.bundles_reported += s.bundles;
    m.tasks_spawned += s.tasks;
    m.tasks_stolen += s.steals;
  }
  m.busy_ns = st.busy_ns;
  m.wall_ns = wall_ns;
  return m;
}

}  // namespace pcycle::detail
