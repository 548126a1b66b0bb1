#include "pcycle/fg_read_tarjan.hpp"

#include "driver.hpp"
#include "rt_core.hpp"

namespace pcycle {

namespace {

using namespace detail;

struct RtLineage {
  RtLineage(std::size_t n, const RtOptions& o) : core(n, o) {}
  std::mutex mu;
  RtCore core;
};

class FgrtDriver {
 public:
  FgrtDriver(const TemporalGraph& g, const Constraints& c, CycleSink* sink, const FineOptions& opts)
      : g_(g),
        c_(c),
        sink_(sink),
        opts_(opts),
        workers_(std::max(1, opts.threads)),
        reporter_(c, opts.bundles, sink),
        pool_(workers_, [n = g.num_vertices(), rt = opts.rt] { return std::make_unique<RtLineage>(n, rt); }),
        masks_(workers_, [n = g.num_vertices()] { return std::make_unique<MaskBuilder>(n); }) {}

  MetricsSnapshot run() {
    c_.validate();
    if (c_.mode == Mode::hop) throw ParameterError("read-tarjan does not support hop mode");
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
      RtLineage* line = pool_.acquire();
      Env env = env_for(ctx);
      line->core.begin(ctx);
      RtTask root;
      bool ok = false;
      {
        std::lock_guard lk(line->mu);
        ok = line->core.start(env, root);
      }
      if (ok) run_task(line, std::move(root), ctx);
      line->core.end();
      pool_.release(line);
    }
    masks_.release(mb);
  }

  void run_task(RtLineage* line, RtTask&& task, const SearchContext& ctx) {
    Env env = env_for(ctx);
    std::vector<RtTask> kids;
    {
      // The whole task runs under the lineage lock so that a thief copies the
      // state between tasks, never in the middle of one.
      std::lock_guard lk(line->mu);
      line->core.run_task(std::move(task), env, [&kids](RtTask&& k) { kids.push_back(std::move(k)); });
    }
    if (kids.empty()) return;
    TaskGroup group;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const bool forced = opts_.force_steal && opts_.force_steal(kids[i].ext.front().v, kids[i].depth);
      ++env.counters->tasks;
      const VertexId first = kids[i].ext.front().v;
      const std::size_t depth = kids[i].depth;
      const std::uint64_t id = group.spawn(
          [this, line, &kids, i, &ctx](const TaskContext& tc) { child(line, std::move(kids[i]), ctx, tc); }, forced);
      if (opts_.on_spawn) opts_.on_spawn(id, first, depth);
    }
    group.wait();
  }

  void child(RtLineage* line, RtTask&& task, const SearchContext& ctx, const TaskContext& tc) {
    if (!tc.stolen()) {
      run_task(line, std::move(task), ctx);
      return;
    }
    ++shards_[static_cast<std::size_t>(Scheduler::current_worker())].steals;
    RtLineage* mine = pool_.acquire();
    std::vector<VertexId> victim_path;
    {
      std::lock_guard lk(line->mu);
      mine->core = line->core;
      if (opts_.on_steal) victim_path = line->core.path();
    }
    if (opts_.on_steal) {
      StealEvent e;
      e.vertex = task.ext.front().v;
      e.depth = task.depth;
      e.victim_path = std::move(victim_path);
      e.path = mine->core.path();
      opts_.on_steal(e);
    }
    run_task(mine, std::move(task), ctx);
    mine->core.end();
    pool_.release(mine);
  }

  const TemporalGraph& g_;
  const Constraints& c_;
  CycleSink* sink_;
  const FineOptions& opts_;
  int workers_;
  Reporter reporter_;
  WorkerPool<RtLineage> pool_;
  WorkerPool<MaskBuilder> masks_;
  std::vector<CounterShard> shards_;
  EventTrace* trace_ = nullptr;
};

}  // namespace

MetricsSnapshot fgrt_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                               const FineOptions& opts) {
  if (opts.threads < 1) throw ParameterError("threads must be at least 1");
  return FgrtDriver(g, c, sink, opts).run();
}

}  // namespace pcycle
