#pragma once

#include "pcycle/constraints.hpp"
#include "pcycle/metrics.hpp"
#include "pcycle/pruning.hpp"
#include "pcycle/sink.hpp"
#include "pcycle/trace.hpp"

namespace pcycle {

struct SeqOptions {
  Pruning prune = Pruning::automatic;
  /// Report bundles as such; when false every bundle is expanded first.
  bool bundles = true;
  EventTrace* trace = nullptr;
  /// Optional out-parameter receiving cycle and bundle totals as well.
  MetricsSnapshot* metrics = nullptr;
};

/// Read-Tarjan pruning improvements, each independently switchable.
struct RtOptions {
  bool fwd_blk = true;         // children inherit the parent's blocked vertices
  bool fwd_ext = true;         // children receive the extension found by the parent
  bool blk_on_success = true;  // block dead vertices met by a successful search

  static RtOptions all_off() { return {false, false, false}; }
  friend bool operator==(const RtOptions&, const RtOptions&) = default;
};

/// Explores every simple path; the reference enumerator for all modes.
/// With bundles disabled it walks individual edges instead of edge groups.
VisitCounters tiernan_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                const SeqOptions& opts = {});

/// Johnson's algorithm with blocked set and unblock lists (simple mode).
VisitCounters johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                const SeqOptions& opts = {});

/// Read-Tarjan path-extension search (simple or temporal mode).
VisitCounters read_tarjan_enumerate(const TemporalGraph& g, const Constraints& c, const RtOptions& rt,
                                    CycleSink* sink, const SeqOptions& opts = {});

}  // namespace pcycle
