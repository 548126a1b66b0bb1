#pragma once

#include "pcycle/enum_seq.hpp"

namespace pcycle {

enum class Grain { vertex, edge };
enum class CoarseAlgo { tiernan, johnson, read_tarjan, temporal_johnson, hop_johnson };

struct CoarseOptions {
  int threads = 1;
  Grain grain = Grain::edge;
  Pruning prune = Pruning::automatic;
  bool bundles = true;
  RtOptions rt;
  std::uint64_t seed = 0;
};

/// One sequential search per start vertex or start edge, spread over a
/// work-stealing pool.
MetricsSnapshot coarse_enumerate(const TemporalGraph& g, const Constraints& c, CoarseAlgo algo,
                                 CycleSink* sink, const CoarseOptions& opts = {});

}  // namespace pcycle
