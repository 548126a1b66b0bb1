#pragma once

#include "pcycle/parallel.hpp"

namespace pcycle {

/// Fine-grained parallel Johnson for any mode: simple cycles use blocked
/// sets, temporal cycles closing times and hop-limited cycles barriers.
MetricsSnapshot fgj_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                              const FineOptions& opts = {});

/// Same as fgj_enumerate; `c.mode` must be temporal.
MetricsSnapshot fg_temporal_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                      const FineOptions& opts = {});

/// Same as fgj_enumerate; `c.mode` must be hop.
MetricsSnapshot fg_hop_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                 const FineOptions& opts = {});

}  // namespace pcycle
