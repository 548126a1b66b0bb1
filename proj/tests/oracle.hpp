#pragma once

// Brute-force reference: lists every cycle as a sequence of individual edges
// straight from the definitions, then filters by the constraints. Shares no
// search code with the library.

#include <algorithm>
#include <vector>

#include "pcycle/bundle.hpp"
#include "pcycle/graph.hpp"

namespace oracle {

using namespace pcycle;

inline bool admissible(const std::vector<Timestamp>& ts, const Constraints& c) {
  if (c.mode == Mode::hop && static_cast<int>(ts.size()) > c.max_hops) return false;
  const std::size_t k = ts.size();
  if (c.mode == Mode::temporal) {
    // Some rotation must be increasing; it starts at a smallest timestamp.
    for (std::size_t s = 0; s < k; ++s) {
      bool inc = true;
      for (std::size_t i = 1; i < k && inc; ++i) {
        const Timestamp a = ts[(s + i - 1) % k], b = ts[(s + i) % k];
        inc = c.nondecreasing ? b >= a : b > a;
      }
      if (inc) {
        if (c.window && ts[(s + k - 1) % k] - ts[s] > *c.window) return false;
        return true;
      }
    }
    return false;
  }
  if (c.window) {
    const auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
    if (*hi - *lo > *c.window) return false;
  }
  return true;
}

/// All cycles admitted by `c`, each once, in canonical form, sorted.
inline std::vector<CycleRecord> cycles(const TemporalGraph& g, const Constraints& c) {
  const auto edges = g.edges();
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<TemporalEdge>> out(n);
  for (const auto& e : edges) out[e.src].push_back(e);
  std::vector<CycleRecord> found;
  std::vector<VertexId> path;
  std::vector<Timestamp> ts;
  std::vector<char> on(n, 0);
  // Each cycle is produced from its smallest vertex, which is the canonical start.
  auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
    for (const auto& e : out[v]) {
      if (e.dst == s) {
        ts.push_back(e.ts);
        if (admissible(ts, c)) found.push_back({path, ts});
        ts.pop_back();
      } else if (e.dst > s && !on[e.dst]) {
        on[e.dst] = 1;
        path.push_back(e.dst);
        ts.push_back(e.ts);
        self(self, s, e.dst);
        ts.pop_back();
        path.pop_back();
        on[e.dst] = 0;
      }
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    on[s] = 1;
    dfs(dfs, s, s);
    on[s] = 0;
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace oracle
