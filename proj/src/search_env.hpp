#pragma once

#include <vector>

#include "pcycle/constraints.hpp"
#include "pcycle/sink.hpp"
#include "pcycle/trace.hpp"

namespace pcycle::detail {

/// Vertices whose state differs from the initial one, each listed once.
class TouchedSet {
 public:
  explicit TouchedSet(std::size_t n = 0) : flag_(n, 0) {}
  void add(VertexId v) {
    if (!flag_[v]) {
      flag_[v] = 1;
      list_.push_back(v);
    }
  }
  void clear() {
    for (VertexId v : list_) flag_[v] = 0;
    list_.clear();
  }
  auto begin() const { return list_.begin(); }
  auto end() const { return list_.end(); }
  std::size_t size() const { return list_.size(); }

 private:
  std::vector<std::uint8_t> flag_;
  std::vector<VertexId> list_;
};

/// What one running search needs besides its own state.
struct Env {
  const SearchContext* ctx = nullptr;
  const Reporter* reporter = nullptr;
  CounterShard* counters = nullptr;
  std::size_t shard = 0;
  EventTrace* trace = nullptr;

  void trace_event(TraceEvent::Kind k, VertexId v) const {
    if (trace) trace->push(k, v);
  }
};

/// Reports the cycle formed by `path` plus a closing hop back to path[0].
/// hop_in[i] holds the timestamps of the edge path[i-1] -> path[i].
inline void report_path(const Env& env, std::span<const VertexId> path,
                        std::span<const std::span<const Timestamp>> hop_in,
                        std::span<const Timestamp> closing,
                        std::vector<std::span<const Timestamp>>& scratch) {
  scratch.assign(hop_in.begin() + 1, hop_in.begin() + static_cast<std::ptrdiff_t>(path.size()));
  scratch.push_back(closing);
  env.trace_event(TraceEvent::cycle, path.back());
  env.reporter->report(env.shard, *env.counters, BundleView{path, scratch, env.ctx->t0()});
}

}  // namespace pcycle::detail
