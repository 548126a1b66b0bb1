#pragma once

#include "pcycle/parallel.hpp"

namespace pcycle {

/// Fine-grained parallel Read-Tarjan: one task per path extension. Simple or
/// temporal mode; uses `opts.rt` for the pruning switches.
MetricsSnapshot fgrt_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                               const FineOptions& opts = {});

}  // namespace pcycle
