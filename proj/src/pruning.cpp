#include "pcycle/pruning.hpp"

#include <algorithm>
#include <queue>

namespace pcycle {

Pruning resolve_pruning(Pruning p, const Constraints& c) {
  if (p == Pruning::automatic) return c.mode == Mode::temporal ? Pruning::cycle_union : Pruning::scc;
  if (p == Pruning::cycle_union && c.mode != Mode::temporal) {
    throw ParameterError("cycle-union pruning requires temporal mode");
  }
  return p;
}

WindowView window_of(const TemporalGraph& g, const TemporalEdge& start, Timestamp delta) {
  const Timestamp hi = delta < kTsMax - start.ts ? start.ts + delta : kTsMax;
  return WindowView{&g, start.ts, hi, nullptr};
}

bool same_ts_admissible(const TemporalEdge& candidate, const TemporalEdge& start) {
  if (candidate == start) return true;
  if (candidate.ts != start.ts) return candidate.ts > start.ts;
  return candidate.src < start.src;
}

MaskBuilder::MaskBuilder(std::size_t n)
    : mask_(n, 0), seen_(n, 0), arrive_(n, kTsMax), depart_(n, kTsMin) {}

void MaskBuilder::reset() {
  for (VertexId v : touched_) {
    mask_[v] = 0;
    seen_[v] = 0;
    arrive_[v] = kTsMax;
    depart_[v] = kTsMin;
  }
  touched_.clear();
}

const std::vector<std::uint8_t>* MaskBuilder::build(const SearchContext& ctx, Pruning p, bool& skip) {
  reset();
  skip = false;
  switch (p) {
    case Pruning::none:
    case Pruning::automatic:
      return nullptr;
    case Pruning::scc:
      skip = !build_scc(ctx);
      return &mask_;
    case Pruning::cycle_union:
      skip = !build_cycle_union(ctx);
      return &mask_;
  }
  return nullptr;
}

bool MaskBuilder::build_scc(const SearchContext& ctx) {
  const auto& g = ctx.graph();
  const VertexId root = ctx.root();
  bool reached = false;
  stack_.clear();
  seen_[ctx.first()] = 1;
  touched_.push_back(ctx.first());
  stack_.push_back(ctx.first());
  while (!stack_.empty()) {
    VertexId x = stack_.back();
    stack_.pop_back();
    for (const auto& grp : g.out_groups(x)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w) || ctx.admissible(x, g.out_ts(grp)).empty()) continue;
      if (w == root) {
        reached = true;
      } else if (!seen_[w]) {
        seen_[w] = 1;
        touched_.push_back(w);
        stack_.push_back(w);
      }
    }
  }
  if (!reached) return false;
  mask_[root] = 1;
  touched_.push_back(root);
  stack_.push_back(root);
  while (!stack_.empty()) {
    VertexId x = stack_.back();
    stack_.pop_back();
    for (const auto& grp : g.in_groups(x)) {
      const VertexId u = grp.neighbor;
      if (u == root || !seen_[u] || mask_[u]) continue;
      if (ctx.admissible(u, g.in_ts(grp)).empty()) continue;
      mask_[u] = 1;
      stack_.push_back(u);
    }
  }
  return mask_[ctx.first()] != 0;
}

bool MaskBuilder::build_cycle_union(const SearchContext& ctx) {
  const auto& g = ctx.graph();
  const VertexId root = ctx.root();
  using Item = std::pair<Timestamp, VertexId>;
  // Earliest arrival, forward from the start edge, never passing the root.
  std::priority_queue<Item, std::vector<Item>, std::greater<>> fwd;
  arrive_[ctx.first()] = ctx.t0();
  touched_.push_back(ctx.first());
  fwd.push({ctx.t0(), ctx.first()});
  while (!fwd.empty()) {
    auto [a, x] = fwd.top();
    fwd.pop();
    if (a != arrive_[x] || x == root) continue;
    for (const auto& grp : g.out_groups(x)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w)) continue;
      auto ts = ctx.admissible(x, g.out_ts(grp));
      auto i = ctx.first_following(ts, a);
      if (i == ts.size() || ts[i] >= arrive_[w]) continue;
      if (arrive_[w] == kTsMax && depart_[w] == kTsMin) touched_.push_back(w);
      arrive_[w] = ts[i];
      fwd.push({ts[i], w});
    }
  }
  if (arrive_[root] == kTsMax) return false;
  // Latest departure towards the root, backward over forward-reached vertices.
  std::priority_queue<Item> bwd;
  auto relax = [&](VertexId u, Timestamp d) {
    if (d > depart_[u]) {
      depart_[u] = d;
      bwd.push({d, u});
    }
  };
  for (const auto& grp : g.in_groups(root)) {
    const VertexId u = grp.neighbor;
    if (arrive_[u] == kTsMax) continue;
    auto ts = ctx.admissible(u, g.in_ts(grp));
    if (!ts.empty()) relax(u, ts.back());
  }
  while (!bwd.empty()) {
    auto [d, x] = bwd.top();
    bwd.pop();
    if (d != depart_[x]) continue;
    for (const auto& grp : g.in_groups(x)) {
      const VertexId u = grp.neighbor;
      if (u == root || arrive_[u] == kTsMax) continue;
      auto ts = ctx.admissible(u, g.in_ts(grp));
      // Latest t on u->x that still lets x leave at d.
      auto it = ctx.strict() ? std::lower_bound(ts.begin(), ts.end(), d)
                             : std::upper_bound(ts.begin(), ts.end(), d);
      if (it == ts.begin()) continue;
      relax(u, *(it - 1));
    }
  }
  mask_[root] = 1;
  for (VertexId v : touched_) {
    if (v != root && arrive_[v] != kTsMax && depart_[v] != kTsMin && ctx.follows(arrive_[v], depart_[v])) {
      mask_[v] = 1;
    }
  }
  return mask_[ctx.first()] != 0;
}

namespace {

std::vector<VertexId> mask_for_edge(const TemporalGraph& g, const TemporalEdge& start,
                                    std::optional<Timestamp> delta, Mode mode, Pruning p) {
  auto groups = g.out_groups(start.src);
  auto it = std::find_if(groups.begin(), groups.end(),
                         [&](const AdjGroup& a) { return a.neighbor == start.dst; });
  if (it == groups.end()) throw ParameterError("start edge not in graph");
  Constraints c;
  c.mode = mode;
  c.window = delta;
  if (!c.edge_rooted()) c.window = kTsMax;
  StartUnit u{start.src, start.dst, static_cast<std::uint32_t>(it - groups.begin()), start.ts};
  SearchContext ctx(g, c, u);
  MaskBuilder mb(g.num_vertices());
  bool skip = false;
  const auto* mask = mb.build(ctx, p, skip);
  std::vector<VertexId> out;
  if (skip || mask == nullptr) return out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if ((*mask)[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<VertexId> scc_of_edge(const TemporalGraph& g, const TemporalEdge& start,
                                  std::optional<Timestamp> delta) {
  return mask_for_edge(g, start, delta, Mode::simple, Pruning::scc);
}

std::vector<VertexId> cycle_union_of_edge(const TemporalGraph& g, const TemporalEdge& start,
                                          std::optional<Timestamp> delta) {
  return mask_for_edge(g, start, delta, Mode::temporal, Pruning::cycle_union);
}

}  // namespace pcycle
