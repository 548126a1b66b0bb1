#pragma once

#include "pcycle/enum_seq.hpp"

namespace pcycle {

/// Temporal cycles with closing times; `c.mode` must be temporal.
VisitCounters temporal_johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                         const SeqOptions& opts = {});

/// Cycles of at most `c.max_hops` edges using barriers; `c.mode` must be hop.
VisitCounters hop_johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                    const SeqOptions& opts = {});

/// Read-Tarjan over temporal cycles; `c.mode` must be temporal.
VisitCounters temporal_read_tarjan_enumerate(const TemporalGraph& g, const Constraints& c,
                                             const RtOptions& rt, CycleSink* sink,
                                             const SeqOptions& opts = {});

}  // namespace pcycle
