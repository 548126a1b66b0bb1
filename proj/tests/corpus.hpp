#pragma once

#include <vector>

#include "pcycle/generators.hpp"

namespace corpus {

/// Seeded small random multigraphs: n <= 10, edge probability <= 0.3,
/// timestamps in [0, 20], some parallel edges.
inline std::vector<pcycle::TemporalGraph> random_graphs(std::size_t count, std::uint64_t seed = 7) {
  std::vector<pcycle::TemporalGraph> gs;
  for (std::size_t i = 0; i < count; ++i) {
    pcycle::RandomGraphParams p;
    p.seed = seed * 7919 + i;
    p.n = 4 + (p.seed % 7);
    p.edge_prob = 0.15 + 0.05 * static_cast<double>(p.seed % 4);
    p.ts_max = 20;
    p.parallel_prob = 0.25;
    gs.push_back(pcycle::random_graph(p));
  }
  return gs;
}

}  // namespace corpus
