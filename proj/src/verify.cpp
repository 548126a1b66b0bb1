#include "pcycle/verify.hpp"

#include <sstream>

namespace pcycle {

namespace {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::temporal:
      return "temporal";
    case Mode::hop:
      return "hop";
    case Mode::simple:
      break;
  }
  return "simple";
}

}  // namespace

std::string describe(const Constraints& c, const EngineConfig& cfg) {
  std::ostringstream os;
  static const char* algos[] = {"tiernan", "johnson", "read-tarjan"};
  static const char* pars[] = {"seq", "coarse", "fine"};
  os << "--mode " << mode_name(c.mode);
  if (c.mode == Mode::hop) os << " --hops " << c.max_hops;
  if (c.window) os << " --window " << *c.window;
  if (c.nondecreasing) os << " --temporal-nondecreasing";
  os << " --algo " << algos[static_cast<int>(cfg.algo)] << " --parallel " << pars[static_cast<int>(cfg.parallel)];
  if (cfg.parallel == Parallelism::coarse) os << " --grain " << (cfg.grain == Grain::edge ? "edge" : "vertex");
  if (cfg.parallel != Parallelism::seq) os << " --threads " << cfg.fine.threads;
  if (cfg.parallel == Parallelism::fine && cfg.algo == Algorithm::johnson)
    os << " --cos " << (cfg.fine.cos == CopyOnSteal::complete ? "complete" : "recursive");
  os << " --bundles " << (cfg.fine.bundles ? "on" : "off");
  if (cfg.algo == Algorithm::read_tarjan) {
    const auto& r = cfg.fine.rt;
    os << " [fwd_blk=" << r.fwd_blk << " fwd_ext=" << r.fwd_ext << " blk_on_success=" << r.blk_on_success << "]";
  }
  return os.str();
}

std::vector<VerifyCase> verify_matrix(const MatrixOptions& opts) {
  std::vector<Constraints> cons;
  for (Mode m : opts.modes) {
    for (const auto& w : opts.windows) {
      if (m == Mode::hop) {
        for (int L : opts.hop_limits) cons.push_back({m, w, L, false});
      } else {
        cons.push_back({m, w, 0, false});
      }
    }
  }
  std::vector<RtOptions> rts{RtOptions{}};
  if (opts.all_rt_switches) {
    rts.clear();
    for (int mask = 0; mask < 8; ++mask) rts.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
  }
  std::vector<bool> bundles{true};
  if (opts.both_bundle_settings) bundles.push_back(false);

  std::vector<VerifyCase> out;
  auto add = [&](const Constraints& c, EngineConfig cfg) {
    cfg.fine.seed = opts.seed;
    out.push_back({c, cfg, describe(c, cfg)});
  };
  for (const auto& c : cons) {
    for (bool b : bundles) {
      EngineConfig base;
      base.fine.bundles = b;
      // Johnson family.
      base.algo = Algorithm::johnson;
      base.parallel = Parallelism::seq;
      add(c, base);
      for (Grain gr : {Grain::vertex, Grain::edge}) {
        EngineConfig e = base;
        e.parallel = Parallelism::coarse;
        e.grain = gr;
        e.fine.threads = 2;
        add(c, e);
      }
      for (int p : opts.fine_threads) {
        for (CopyOnSteal cos : {CopyOnSteal::recursive, CopyOnSteal::complete}) {
          EngineConfig e = base;
          e.parallel = Parallelism::fine;
          e.fine.threads = p;
          e.fine.cos = cos;
          add(c, e);
        }
      }
      if (c.mode == Mode::hop) continue;
      // Read-Tarjan.
      for (const auto& rt : rts) {
        EngineConfig e = base;
        e.algo = Algorithm::read_tarjan;
        e.fine.rt = rt;
        e.parallel = Parallelism::seq;
        add(c, e);
        e.parallel = Parallelism::coarse;
        e.fine.threads = 2;
        add(c, e);
        for (int p : opts.fine_threads) {
          e.parallel = Parallelism::fine;
          e.fine.threads = p;
          add(c, e);
        }
      }
    }
  }
  return out;
}

std::vector<CycleRecord> collect_cycles(const TemporalGraph& g, const Constraints& c, const EngineConfig& cfg) {
  CollectingSink sink(c.mode, c.nondecreasing);
  run_engine(g, c, cfg, &sink);
  return sink.cycles();
}

std::vector<CycleRecord> reference_cycles(const TemporalGraph& g, const Constraints& c) {
  CollectingSink sink(c.mode, c.nondecreasing);
  SeqOptions o;
  o.prune = Pruning::none;
  o.bundles = false;
  tiernan_enumerate(g, c, &sink, o);
  return sink.cycles();
}

std::optional<Mismatch> verify_graph(const TemporalGraph& g, const std::vector<VerifyCase>& cases) {
  const Constraints* last = nullptr;
  std::vector<CycleRecord> expected;
  for (const auto& vc : cases) {
    if (last == nullptr || !(last->mode == vc.constraints.mode && last->window == vc.constraints.window &&
                             last->max_hops == vc.constraints.max_hops &&
                             last->nondecreasing == vc.constraints.nondecreasing)) {
      expected = reference_cycles(g, vc.constraints);
      last = &vc.constraints;
    }
    auto actual = collect_cycles(g, vc.constraints, vc.config);
    if (actual != expected) return Mismatch{vc, g, expected, std::move(actual)};
  }
  return std::nullopt;
}

Mismatch shrink(const Mismatch& m) {
  Mismatch best = m;
  bool progress = true;
  while (progress) {
    progress = false;
    auto edges = best.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto fewer = edges;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      auto g = TemporalGraph::from_edges(best.graph.num_vertices(), fewer);
      auto exp = reference_cycles(g, best.which.constraints);
      auto act = collect_cycles(g, best.which.constraints, best.which.config);
      if (exp != act) {
        best.graph = std::move(g);
        best.expected = std::move(exp);
        best.actual = std::move(act);
        progress = true;
        break;
      }
    }
  }
  return best;
}

}  // namespace pcycle
