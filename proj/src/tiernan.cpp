#include "unit_search.hpp"

namespace pcycle::detail {

void TiernanUnit::push(VertexId v, std::span<const Timestamp> hop) {
  path_.push_back(v);
  hop_in_.push_back(hop);
  onpath_[v] = 1;
}

void TiernanUnit::pop() {
  onpath_[path_.back()] = 0;
  path_.pop_back();
  hop_in_.pop_back();
}

void TiernanUnit::run(const Env& env) {
  const auto& ctx = *env.ctx;
  push(ctx.root(), {});
  const Timestamp a0 = ctx.temporal() ? ctx.t0() : kTsMin;
  if (per_edge_) {
    auto first = ctx.first_hop();
    for (std::size_t j = 0; j < first.size(); ++j) {
      push(ctx.first(), first.subspan(j, 1));
      PCYCLE_COUNT(++env.counters->visits.vertex_visits);
      dfs(env, a0);
      pop();
    }
  } else {
    push(ctx.first(), ctx.first_hop());
    PCYCLE_COUNT(++env.counters->visits.vertex_visits);
    dfs(env, a0);
    pop();
  }
  pop();
}

void TiernanUnit::dfs(const Env& env, Timestamp arrival) {
  const auto& ctx = *env.ctx;
  const auto& g = ctx.graph();
  const VertexId v = path_.back();
  const bool hop = ctx.constraints().mode == Mode::hop;
  const std::size_t limit = hop ? static_cast<std::size_t>(ctx.max_hops()) : SIZE_MAX;
  for (const auto& grp : g.out_groups(v)) {
    const VertexId w = grp.neighbor;
    if (!ctx.enterable(w)) continue;
    auto ts = ctx.admissible(v, g.out_ts(grp));
    const std::size_t i = ctx.temporal() ? ctx.first_following(ts, arrival) : 0;
    if (i >= ts.size()) continue;
    const bool closes = w == ctx.root();
    if (!closes && (onpath_[w] || path_.size() >= limit)) {
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      continue;
    }
    if (closes && path_.size() > limit) continue;
    if (!per_edge_) {
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      if (closes) {
        report_path(env, path_, hop_in_, ts, scratch_);
      } else {
        push(w, ts);
        PCYCLE_COUNT(++env.counters->visits.vertex_visits);
        dfs(env, ts[i]);
        pop();
      }
      continue;
    }
    for (std::size_t j = i; j < ts.size(); ++j) {
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      if (closes) {
        report_path(env, path_, hop_in_, ts.subspan(j, 1), scratch_);
      } else {
        push(w, ts.subspan(j, 1));
        PCYCLE_COUNT(++env.counters->visits.vertex_visits);
        dfs(env, ctx.temporal() ? ts[j] : kTsMin);
        pop();
      }
    }
  }
}

std::unique_ptr<UnitSearch> make_unit_search(Algo algo, std::size_t n, const Constraints& c,
                                             const RtOptions& rt, bool per_edge_tiernan) {
  switch (algo) {
    case Algo::tiernan:
      return std::make_unique<TiernanUnit>(n, per_edge_tiernan);
    case Algo::johnson:
      if (c.mode == Mode::temporal) return std::make_unique<JohnsonUnit<TemporalCore>>(TemporalCore(n));
      if (c.mode == Mode::hop) return std::make_unique<JohnsonUnit<HopCore>>(HopCore(n, c.max_hops));
      return std::make_unique<JohnsonUnit<SimpleCore>>(SimpleCore(n));
    case Algo::read_tarjan:
      if (c.mode == Mode::hop) throw ParameterError("read-tarjan does not support hop mode");
      return std::make_unique<RtUnit>(n, rt);
  }
  return nullptr;
}

MetricsSnapshot run_sequential(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                               const SeqOptions& opts, UnitSearch& search) {
  c.validate();
  const Pruning prune = resolve_pruning(opts.prune, c);
  if (sink) sink->prepare(1);
  Reporter reporter(c, opts.bundles, sink);
  CounterShard counters;
  MaskBuilder masks(g.num_vertices());
  for (const auto& unit : start_units(g, c)) {
    SearchContext ctx(g, c, unit);
    bool skip = false;
    const auto* mask = masks.build(ctx, prune, skip);
    if (skip) continue;
    ctx.set_mask(mask);
    Env env{&ctx, &reporter, &counters, 0, opts.trace};
    search.run(env);
  }
  MetricsSnapshot m;
  m.visits = counters.visits;
  m.cycles_reported = counters.cycles;
  m.bundles_reported = counters.bundles;
  m.busy_ns = {0};
  if (opts.metrics) *opts.metrics = m;
  return m;
}

}  // namespace pcycle::detail
