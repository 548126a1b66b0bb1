#pragma once

#include <optional>
#include <vector>

#include "pcycle/constraints.hpp"

namespace pcycle {

enum class Pruning { automatic, none, scc, cycle_union };

/// Resolves `automatic` to the per-mode default and rejects combinations
/// that make no sense (cycle-union outside temporal mode).
Pruning resolve_pruning(Pruning p, const Constraints& c);

WindowView window_of(const TemporalGraph& g, const TemporalEdge& start, Timestamp delta);

/// Equal-timestamp tie-break: an edge with the start edge's timestamp is
/// usable only when its source id is smaller than the start edge's source.
bool same_ts_admissible(const TemporalEdge& candidate, const TemporalEdge& start);

/// Vertices strongly connected with the start edge inside its window, sorted.
/// Empty when no cycle can pass through the start edge.
std::vector<VertexId> scc_of_edge(const TemporalGraph& g, const TemporalEdge& start,
                                  std::optional<Timestamp> delta);

/// Vertices lying on a time-respecting path that leaves through the start
/// edge and returns to its source, sorted. Empty when there is none.
std::vector<VertexId> cycle_union_of_edge(const TemporalGraph& g, const TemporalEdge& start,
                                          std::optional<Timestamp> delta);

/// Reusable per-worker scratch that computes the vertex mask of one search.
class MaskBuilder {
 public:
  explicit MaskBuilder(std::size_t n);

  /// Returns the mask to install on `ctx` (nullptr when pruning is off).
  /// Sets `skip` when the search cannot produce any cycle.
  const std::vector<std::uint8_t>* build(const SearchContext& ctx, Pruning p, bool& skip);

 private:
  bool build_scc(const SearchContext& ctx);
  bool build_cycle_union(const SearchContext& ctx);
  void reset();

  std::vector<std::uint8_t> mask_, seen_;
  std::vector<Timestamp> arrive_, depart_;
  std::vector<VertexId> touched_, stack_;
};

}  // namespace pcycle
