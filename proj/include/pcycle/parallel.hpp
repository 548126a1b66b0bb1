#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pcycle/enum_seq.hpp"
#include "pcycle/runtime.hpp"

namespace pcycle {

enum class CopyOnSteal { recursive, complete };

/// Snapshot taken right after a stolen task adjusted its copied state.
/// Only the array matching the search mode is filled.
struct StealEvent {
  VertexId vertex = 0;     // first vertex the stolen task explores
  std::size_t depth = 0;   // path length once that vertex is pushed
  std::vector<VertexId> victim_path;
  std::vector<VertexId> path;
  std::vector<std::uint8_t> blocked;  // simple mode
  std::vector<Timestamp> closing;     // temporal mode
  std::vector<int> barrier;           // hop mode
};

/// Settings shared by the fine-grained enumerators.
struct FineOptions {
  int threads = 1;
  CopyOnSteal cos = CopyOnSteal::recursive;
  Pruning prune = Pruning::automatic;
  bool bundles = true;
  RtOptions rt;  // read-tarjan only
  std::uint64_t seed = 0;
  bool perturb = false;
  std::optional<StealInjection> inject;
  /// Search tasks for which this returns true are left to other workers
  /// (ignored with one worker). Arguments: first vertex, task depth.
  std::function<bool(VertexId, std::size_t)> force_steal;
  /// Called for every search task spawned: task id, first vertex, depth.
  std::function<void(std::uint64_t, VertexId, std::size_t)> on_spawn;
  EventTrace* trace = nullptr;  // single worker only
  std::function<void(const StealEvent&)> on_steal;
};

}  // namespace pcycle
