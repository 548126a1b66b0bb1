#include "pcycle/constraints.hpp"

#include <algorithm>

namespace pcycle {

void Constraints::validate() const {
  if (window && *window < 0) throw ParameterError("window must be non-negative");
  if (mode == Mode::hop && max_hops < 2) throw ParameterError("hop limit L must be at least 2");
}

std::vector<StartUnit> start_units(const TemporalGraph& g, const Constraints& c) {
  std::vector<StartUnit> units;
  const bool by_edge = c.edge_rooted();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto groups = g.out_groups(v);
    for (std::uint32_t i = 0; i < groups.size(); ++i) {
      if (by_edge) {
        for (Timestamp t : g.out_ts(groups[i])) units.push_back({v, groups[i].neighbor, i, t});
      } else if (groups[i].neighbor > v) {
        units.push_back({v, groups[i].neighbor, i, 0});
      }
    }
  }
  return units;
}

SearchContext::SearchContext(const TemporalGraph& g, const Constraints& c, const StartUnit& u,
                             const std::vector<std::uint8_t>* mask)
    : g_(&g), c_(&c), unit_(u), mask_(mask), id_guard_(!c.edge_rooted()) {
  const auto ts = g.out_ts(g.out_groups(u.root)[u.group]);
  if (c.edge_rooted()) {
    lo_ = u.t0;
    hi_ = (c.window && *c.window < kTsMax - u.t0) ? u.t0 + *c.window : kTsMax;
    auto it = std::lower_bound(ts.begin(), ts.end(), u.t0);
    first_hop_ = {it, it + 1};
  } else {
    lo_ = kTsMin;
    hi_ = kTsMax;
    first_hop_ = ts;
  }
}

std::span<const Timestamp> SearchContext::admissible(VertexId src, std::span<const Timestamp> ts) const {
  if (!c_->edge_rooted()) return ts;
  // Temporal order already fixes the start edge of a cycle, so only
  // windowed simple searches need the tie-break on equal timestamps.
  auto b = (temporal() || src < unit_.root) ? std::lower_bound(ts.begin(), ts.end(), unit_.t0)
                                            : std::upper_bound(ts.begin(), ts.end(), unit_.t0);
  auto e = hi_ == kTsMax ? ts.end() : std::upper_bound(b, ts.end(), hi_);
  return {b, e};
}

std::size_t SearchContext::first_following(std::span<const Timestamp> ts, Timestamp arrival) const {
  auto it = strict() ? std::upper_bound(ts.begin(), ts.end(), arrival)
                     : std::lower_bound(ts.begin(), ts.end(), arrival);
  return static_cast<std::size_t>(it - ts.begin());
}

}  // namespace pcycle
