#pragma once

#include "pcycle/coarse.hpp"
#include "pcycle/enum_constrained.hpp"
#include "pcycle/fg_johnson.hpp"
#include "pcycle/fg_read_tarjan.hpp"

namespace pcycle {

enum class Algorithm { tiernan, johnson, read_tarjan };
enum class Parallelism { seq, coarse, fine };

/// One enumeration request: algorithm family, execution strategy and the
/// knobs of the fine-grained runtime.
struct EngineConfig {
  Algorithm algo = Algorithm::johnson;
  Parallelism parallel = Parallelism::seq;
  Grain grain = Grain::edge;
  FineOptions fine;  // threads, copy-on-steal, pruning, bundles, read-tarjan switches, seed, test hooks
};

/// Throws ParameterError naming the violated constraint.
void check_config(const Constraints& c, const EngineConfig& cfg);

/// Runs the configured enumerator. Johnson picks its blocking scheme from
/// `c.mode`.
MetricsSnapshot run_engine(const TemporalGraph& g, const Constraints& c, const EngineConfig& cfg, CycleSink* sink);

}  // namespace pcycle
