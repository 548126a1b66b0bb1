#include "pcycle/engine.hpp"

#include "driver.hpp"
#include "unit_search.hpp"

namespace pcycle {

void check_config(const Constraints& c, const EngineConfig& cfg) {
  c.validate();
  if (c.mode == Mode::hop && cfg.algo == Algorithm::read_tarjan)
    throw ParameterError("--algo read-tarjan cannot be combined with --mode hop");
  if (cfg.parallel == Parallelism::fine && cfg.algo == Algorithm::tiernan)
    throw ParameterError("--parallel fine requires --algo johnson or read-tarjan");
  if (c.nondecreasing && c.mode != Mode::temporal)
    throw ParameterError("--temporal-nondecreasing requires --mode temporal");
  if (cfg.fine.threads < 1) throw ParameterError("--threads must be at least 1");
  resolve_pruning(cfg.fine.prune, c);
}

MetricsSnapshot run_engine(const TemporalGraph& g, const Constraints& c, const EngineConfig& cfg, CycleSink* sink) {
  check_config(c, cfg);
  const auto& f = cfg.fine;
  switch (cfg.parallel) {
    case Parallelism::fine:
      if (cfg.algo == Algorithm::read_tarjan) return fgrt_enumerate(g, c, sink, f);
      return fgj_enumerate(g, c, sink, f);
    case Parallelism::coarse: {
      CoarseAlgo a = CoarseAlgo::tiernan;
      if (cfg.algo == Algorithm::read_tarjan) {
        a = CoarseAlgo::read_tarjan;
      } else if (cfg.algo == Algorithm::johnson) {
        a = c.mode == Mode::temporal ? CoarseAlgo::temporal_johnson
            : c.mode == Mode::hop    ? CoarseAlgo::hop_johnson
                                     : CoarseAlgo::johnson;
      }
      CoarseOptions o{f.threads, cfg.grain, f.prune, f.bundles, f.rt, f.seed};
      return coarse_enumerate(g, c, a, sink, o);
    }
    case Parallelism::seq:
      break;
  }
  const detail::Algo a = cfg.algo == Algorithm::tiernan   ? detail::Algo::tiernan
                         : cfg.algo == Algorithm::johnson ? detail::Algo::johnson
                                                          : detail::Algo::read_tarjan;
  auto search = detail::make_unit_search(a, g.num_vertices(), c, f.rt, !f.bundles);
  SeqOptions so{f.prune, f.bundles, f.trace, nullptr};
  const std::uint64_t t0 = detail::now_ns();
  MetricsSnapshot m = detail::run_sequential(g, c, sink, so, *search);
  m.wall_ns = detail::now_ns() - t0;
  m.busy_ns = {m.wall_ns};
  return m;
}

}  // namespace pcycle
