#include "pcycle/generators.hpp"

#include <algorithm>
#include <random>

namespace pcycle {

TemporalGraph exp_cycles(std::size_t n) {
  if (n < 3) throw ParameterError("exp-cycles needs n >= 3");
  std::vector<TemporalEdge> e;
  e.push_back({0, 1, 0});
  for (VertexId i = 1; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) e.push_back({i, j, 0});
    e.push_back({i, 0, 0});
  }
  return TemporalGraph::from_edges(n, std::move(e));
}

TemporalGraph blocked_tail(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw ParameterError("blocked-tail needs m >= 1 and k >= 1");
  const std::size_t n = 3 + 2 * m + k;
  std::vector<TemporalEdge> e{{0, 1, 0}, {2, 0, 0}};
  for (std::size_t i = 0; i < m; ++i) {
    const auto w = static_cast<VertexId>(3 + 2 * i);
    const auto u = static_cast<VertexId>(4 + 2 * i);
    e.push_back({1, w, 0});
    e.push_back({1, u, 0});
    e.push_back({w, 2, 0});
    e.push_back({u, 2, 0});
  }
  const auto b0 = static_cast<VertexId>(3 + 2 * m);
  e.push_back({2, b0, 0});
  for (std::size_t j = 0; j + 1 < k; ++j) e.push_back({b0 + static_cast<VertexId>(j), b0 + static_cast<VertexId>(j + 1), 0});
  return TemporalGraph::from_edges(n, std::move(e));
}

TemporalGraph generate_adversarial(Family family, const AdversarialParams& p) {
  return family == Family::exp_cycles ? exp_cycles(p.n) : blocked_tail(p.m, p.k);
}

TemporalGraph random_graph(const RandomGraphParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Timestamp> ts(0, p.ts_max);
  std::vector<TemporalEdge> e;
  for (VertexId u = 0; u < p.n; ++u) {
    for (VertexId v = 0; v < p.n; ++v) {
      if (u == v || coin(rng) >= p.edge_prob) continue;
      e.push_back({u, v, ts(rng)});
      for (int extra = 0; extra < 2 && coin(rng) < p.parallel_prob; ++extra) e.push_back({u, v, ts(rng)});
    }
  }
  return TemporalGraph::from_edges(p.n, std::move(e));
}

TemporalGraph infeasible_region(std::size_t c, std::size_t m) {
  if (c < 1 || m < 1) throw ParameterError("infeasible-region needs c >= 1 and m >= 1");
  const std::size_t n = 3 + c + m;
  std::vector<TemporalEdge> e{{0, 1, 0}, {2, 0, 0}};
  for (std::size_t i = 0; i < c; ++i) {
    const auto u = static_cast<VertexId>(3 + i);
    e.push_back({1, u, 0});
    e.push_back({u, 2, 0});
  }
  const auto b0 = static_cast<VertexId>(3 + c);
  e.push_back({2, b0, 0});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) e.push_back({b0 + static_cast<VertexId>(i), b0 + static_cast<VertexId>(j), 0});
  }
  return TemporalGraph::from_edges(n, std::move(e));
}

TemporalGraph extension_trap(std::size_t core, std::size_t trap) {
  std::vector<TemporalEdge> e = exp_cycles(core).edges();
  const auto t0 = static_cast<VertexId>(core);
  for (VertexId i = 1; i < core; ++i) e.push_back({i, t0, 0});
  for (std::size_t i = 0; i < trap; ++i) {
    for (std::size_t j = i + 1; j < trap; ++j) e.push_back({t0 + static_cast<VertexId>(i), t0 + static_cast<VertexId>(j), 0});
  }
  return TemporalGraph::from_edges(core + trap, std::move(e));
}

TemporalGraph skewed(std::size_t core, std::size_t background, double out_degree, std::uint64_t seed) {
  std::vector<TemporalEdge> e = exp_cycles(core).edges();
  std::mt19937_64 rng(seed);
  const std::size_t n = core + background;
  std::poisson_distribution<int> deg(out_degree);
  // Edges only point forward inside blocks of kBlock vertices, which keeps
  // every background search small.
  constexpr std::size_t kBlock = 16;
  for (std::size_t v = core; v + 1 < n; ++v) {
    const std::size_t block_end = std::min(n - 1, core + ((v - core) / kBlock + 1) * kBlock - 1);
    if (block_end <= v) continue;
    std::uniform_int_distribution<std::size_t> pick(v + 1, block_end);
    for (int d = deg(rng); d > 0; --d) e.push_back({static_cast<VertexId>(v), static_cast<VertexId>(pick(rng)), 0});
  }
  std::uniform_int_distribution<std::size_t> bg(core, n - 1);
  for (VertexId v = 1; v < core; ++v) e.push_back({v, static_cast<VertexId>(bg(rng)), 0});
  return TemporalGraph::from_edges(n, std::move(e));
}

}  // namespace pcycle
