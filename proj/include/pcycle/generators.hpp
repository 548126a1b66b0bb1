#pragma once

#include <cstdint>
#include <string>

#include "pcycle/graph.hpp"

namespace pcycle {

enum class Family { exp_cycles, blocked_tail };

struct AdversarialParams {
  std::size_t n = 0;  // exp-cycles
  std::size_t m = 0;  // blocked-tail detour pairs
  std::size_t k = 0;  // blocked-tail tail length
};

/// exp-cycles(n): v0->v1, vi->vj for 1 <= i < j < n, vi->v0; 2^(n-2) cycles.
/// blocked-tail(m, k): v0->v1, m detour pairs v1->{w_i,u_i}->v2, v2->v0 and a
/// dead-end tail v2->b1->...->bk.
TemporalGraph generate_adversarial(Family family, const AdversarialParams& p);

TemporalGraph exp_cycles(std::size_t n);
TemporalGraph blocked_tail(std::size_t m, std::size_t k);

struct RandomGraphParams {
  std::size_t n = 8;
  double edge_prob = 0.3;
  Timestamp ts_max = 20;
  /// Probability of each additional parallel edge on an existing pair.
  double parallel_prob = 0.25;
  std::uint64_t seed = 1;
};

TemporalGraph random_graph(const RandomGraphParams& p);

/// v0->v1, v1->u_i->v2 for c branches, v2->v0, and an acyclic region
/// v2->b1 with b_i->b_j for i < j that contains no cycle.
TemporalGraph infeasible_region(std::size_t c, std::size_t m);

/// exp-cycles(core) where every core vertex but v0 also points into an
/// acyclic trap of `trap` vertices with all forward edges.
TemporalGraph extension_trap(std::size_t core, std::size_t trap);

/// exp-cycles(core) followed by `background` vertices forming a sparse
/// random acyclic graph with roughly `out_degree` edges per vertex, split
/// into independent blocks of 16 vertices.
TemporalGraph skewed(std::size_t core, std::size_t background, double out_degree, std::uint64_t seed);

}  // namespace pcycle
