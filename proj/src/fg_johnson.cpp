#include "pcycle/fg_johnson.hpp"

#include "driver.hpp"
#include "johnson_core.hpp"

namespace pcycle {

namespace {

using namespace detail;

// Search state of one steal lineage: the tasks that run on it all execute on
// the worker that created the lineage, and thieves lock it only to copy.
template <class Core>
struct Lineage {
  explicit Lineage(Core c) : core(std::move(c)) {}
  std::mutex mu;
  Core core;
};

void adjust(SimpleCore& s, std::size_t d, CopyOnSteal v, const SearchContext&, CounterShard* cs) {
  s.copy_on_steal(d, v == CopyOnSteal::complete ? CosVariant::complete : CosVariant::recursive, cs);
}
void adjust(TemporalCore& s, std::size_t d, CopyOnSteal, const SearchContext& ctx, CounterShard* cs) {
  s.copy_on_steal(d, ctx, cs);
}
void adjust(HopCore& s, std::size_t d, CopyOnSteal, const SearchContext& ctx, CounterShard* cs) {
  s.copy_on_steal(d, ctx, cs);
}

void fill_state(const SimpleCore& s, std::size_t n, StealEvent& e) {
  for (VertexId v = 0; v < n; ++v) e.blocked.push_back(s.is_blocked(v) ? 1 : 0);
}
void fill_state(const TemporalCore& s, std::size_t n, StealEvent& e) {
  for (VertexId v = 0; v < n; ++v) e.closing.push_back(s.closing_time(v));
}
void fill_state(const HopCore& s, std::size_t n, StealEvent& e) {
  for (VertexId v = 0; v < n; ++v) e.barrier.push_back(s.barrier(v));
}

template <class Core>
class FgjDriver {
  using Cand = typename Core::Cand;
  using Result = typename Core::Result;
  using Line = Lineage<Core>;

 public:
  FgjDriver(const TemporalGraph& g, const Constraints& c, CycleSink* sink, const FineOptions& opts,
            std::function<Core()> make_core)
      : g_(g),
        c_(c),
        sink_(sink),
        opts_(opts),
        workers_(std::max(1, opts.threads)),
        reporter_(c, opts.bundles, sink),
        pool_(workers_, [make_core] { return std::make_unique<Line>(make_core()); }),
        masks_(workers_, [n = g.num_vertices()] { return std::make_unique<MaskBuilder>(n); }) {}

  MetricsSnapshot run() {
    c_.validate();
    const Pruning prune = resolve_pruning(opts_.prune, c_);
    shards_.assign(static_cast<std::size_t>(workers_), CounterShard{});
    if (sink_) sink_->prepare(static_cast<std::size_t>(workers_));
    trace_ = workers_ == 1 ? opts_.trace : nullptr;
    const auto units = start_units(g_, c_);
    Scheduler sched({workers_, opts_.seed, opts_.perturb, opts_.inject});
    const std::uint64_t t0 = now_ns();
    sched.run([&] {
      sched.parallel_for(units.size(), [&](std::size_t i) { run_unit(units[i], prune); });
    });
    return collect_metrics(shards_, sched.stats(), now_ns() - t0);
  }

 private:
  Env env_for(const SearchContext& ctx) {
    const int w = Scheduler::current_worker();
    return Env{&ctx, &reporter_, &shards_[static_cast<std::size_t>(w)], static_cast<std::size_t>(w), trace_};
  }

  void run_unit(const StartUnit& u, Pruning prune) {
    MaskBuilder* mb = masks_.acquire();
    SearchContext ctx(g_, c_, u);
    bool skip = false;
    const auto* mask = mb->build(ctx, prune, skip);
    if (!skip) {
      ctx.set_mask(mask);
      Line* line = pool_.acquire();
      line->core.begin(ctx);
      visit(line, line->core.first_cand(ctx), 2, ctx);
      line->core.end();
      pool_.release(line);
    }
    masks_.release(mb);
  }

  // One vertex visit; d is the path length after pushing c.v.
  Result visit(Line* line, const Cand& c, std::size_t d, const SearchContext& ctx) {
    Env env = env_for(ctx);
    typename Core::Acc acc;
    std::vector<Cand> cands;
    {
      std::lock_guard lk(line->mu);
      if (!line->core.enter(c, env)) return Core::blocked_result();
      line->core.scan(acc, cands, env);
    }
    std::vector<Result> res(cands.size(), Core::blocked_result());
    if (!cands.empty()) {
      TaskGroup group;
      // Reverse order so the local LIFO queue runs the first candidate first.
      for (std::size_t i = cands.size(); i-- > 0;) {
        if (!line->core.should_spawn(cands[i])) continue;
        const bool forced = opts_.force_steal && opts_.force_steal(cands[i].v, d + 1);
        ++env.counters->tasks;
        const std::uint64_t id = group.spawn(
            [this, line, &cands, &res, i, d, &ctx](const TaskContext& tc) {
              res[i] = child(line, cands[i], d + 1, ctx, tc);
            },
            forced);
        if (opts_.on_spawn) opts_.on_spawn(id, cands[i].v, d + 1);
      }
      group.wait();
    }
    std::lock_guard lk(line->mu);
    for (std::size_t i = 0; i < cands.size(); ++i) line->core.absorb(acc, cands[i], res[i], env);
    return line->core.leave(acc, env);
  }

  Result child(Line* line, const Cand& c, std::size_t d, const SearchContext& ctx, const TaskContext& tc) {
    if (!tc.stolen()) return visit(line, c, d, ctx);
    Env env = env_for(ctx);
    ++env.counters->steals;
    Line* mine = pool_.acquire();
    std::vector<VertexId> victim_path;
    {
      std::lock_guard lk(line->mu);
      mine->core = line->core;
      if (opts_.on_steal) victim_path = line->core.path();
    }
    adjust(mine->core, d, opts_.cos, ctx, env.counters);
    if (opts_.on_steal) {
      StealEvent e;
      e.vertex = c.v;
      e.depth = d;
      e.victim_path = std::move(victim_path);
      e.path = mine->core.path();
      fill_state(mine->core, g_.num_vertices(), e);
      opts_.on_steal(e);
    }
    visit(mine, c, d, ctx);
    mine->core.end();
    pool_.release(mine);
    // The thief's findings are not visible in the victim's state, so the
    // parent must assume the subtree found cycles.
    return Core::stolen_result();
  }

  const TemporalGraph& g_;
  const Constraints& c_;
  CycleSink* sink_;
  const FineOptions& opts_;
  int workers_;
  Reporter reporter_;
  WorkerPool<Line> pool_;
  WorkerPool<MaskBuilder> masks_;
  std::vector<CounterShard> shards_;
  EventTrace* trace_ = nullptr;
};

}  // namespace

MetricsSnapshot fgj_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                              const FineOptions& opts) {
  if (opts.threads < 1) throw ParameterError("threads must be at least 1");
  const std::size_t n = g.num_vertices();
  switch (c.mode) {
    case Mode::temporal:
      return FgjDriver<TemporalCore>(g, c, sink, opts, [n] { return TemporalCore(n); }).run();
    case Mode::hop: {
      const int L = c.max_hops;
      return FgjDriver<HopCore>(g, c, sink, opts, [n, L] { return HopCore(n, L); }).run();
    }
    case Mode::simple:
      break;
  }
  return FgjDriver<SimpleCore>(g, c, sink, opts, [n] { return SimpleCore(n); }).run();
}

MetricsSnapshot fg_temporal_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                      const FineOptions& opts) {
  if (c.mode != Mode::temporal) throw ParameterError("fg_temporal_enumerate expects temporal mode");
  return fgj_enumerate(g, c, sink, opts);
}

MetricsSnapshot fg_hop_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                 const FineOptions& opts) {
  if (c.mode != Mode::hop) throw ParameterError("fg_hop_enumerate expects hop mode");
  return fgj_enumerate(g, c, sink, opts);
}

}  // namespace pcycle
