#include "pcycle/coarse.hpp"

#include "driver.hpp"
#include "unit_search.hpp"

namespace pcycle {

namespace {

detail::Algo check_algo(CoarseAlgo a, Mode m) {
  switch (a) {
    case CoarseAlgo::tiernan:
      return detail::Algo::tiernan;
    case CoarseAlgo::johnson:
      if (m != Mode::simple) throw ParameterError("johnson requires simple mode");
      return detail::Algo::johnson;
    case CoarseAlgo::temporal_johnson:
      if (m != Mode::temporal) throw ParameterError("temporal_johnson requires temporal mode");
      return detail::Algo::johnson;
    case CoarseAlgo::hop_johnson:
      if (m != Mode::hop) throw ParameterError("hop_johnson requires hop mode");
      return detail::Algo::johnson;
    case CoarseAlgo::read_tarjan:
      if (m == Mode::hop) throw ParameterError("read-tarjan does not support hop mode");
      return detail::Algo::read_tarjan;
  }
  return detail::Algo::johnson;
}

struct WorkerSlot {
  std::unique_ptr<detail::UnitSearch> search;
  MaskBuilder masks;
};

}  // namespace

MetricsSnapshot coarse_enumerate(const TemporalGraph& g, const Constraints& c, CoarseAlgo algo,
                                 CycleSink* sink, const CoarseOptions& opts) {
  using namespace detail;
  c.validate();
  if (opts.threads < 1) throw ParameterError("threads must be at least 1");
  const Algo a = check_algo(algo, c.mode);
  const Pruning prune = resolve_pruning(opts.prune, c);
  const int p = std::max(1, opts.threads);
  std::vector<CounterShard> shards(static_cast<std::size_t>(p));
  if (sink) sink->prepare(static_cast<std::size_t>(p));
  Reporter reporter(c, opts.bundles, sink);
  const auto units = start_units(g, c);

  // Work items: single units, or all units of one start vertex.
  std::vector<std::size_t> bounds{0};
  for (std::size_t i = 1; i <= units.size(); ++i) {
    if (opts.grain == Grain::edge || i == units.size() || units[i].root != units[i - 1].root)
      bounds.push_back(i);
  }
  if (units.empty()) bounds.assign(1, 0);

  const std::size_t n = g.num_vertices();
  WorkerPool<WorkerSlot> slots(p, [&] {
    return std::unique_ptr<WorkerSlot>(new WorkerSlot{make_unit_search(a, n, c, opts.rt, !opts.bundles), MaskBuilder(n)});
  });

  Scheduler sched({p, opts.seed, false, std::nullopt});
  const std::uint64_t t0 = now_ns();
  sched.run([&] {
    sched.parallel_for(bounds.size() - 1, [&](std::size_t k) {
      const auto w = static_cast<std::size_t>(Scheduler::current_worker());
      WorkerSlot* slot = slots.acquire();
      for (std::size_t i = bounds[k]; i < bounds[k + 1]; ++i) {
        SearchContext ctx(g, c, units[i]);
        bool skip = false;
        const auto* mask = slot->masks.build(ctx, prune, skip);
        if (skip) continue;
        ctx.set_mask(mask);
        Env env{&ctx, &reporter, &shards[w], w, nullptr};
        slot->search->run(env);
      }
      slots.release(slot);
    });
  });
  return collect_metrics(shards, sched.stats(), now_ns() - t0);
}

}  // namespace pcycle
