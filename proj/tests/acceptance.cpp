// Acceptance checks, one per criterion. Usage: pcycle_acceptance N
// Prints a single "criterion N: PASS|FAIL ..." line and exits 0 on PASS.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "corpus.hpp"
#include "oracle.hpp"
#include "pcycle/coarse.hpp"
#include "pcycle/enum_constrained.hpp"
#include "pcycle/engine.hpp"
#include "pcycle/fg_johnson.hpp"
#include "pcycle/fg_read_tarjan.hpp"
#include "pcycle/generators.hpp"
#include "pcycle/verify.hpp"

using namespace pcycle;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

std::vector<Constraints> corpus_constraints() {
  std::vector<Constraints> out;
  for (const std::optional<Timestamp>& w : {std::optional<Timestamp>{}, std::optional<Timestamp>{2},
                                            std::optional<Timestamp>{5}}) {
    out.push_back({Mode::simple, w, 0, false});
    out.push_back({Mode::temporal, w, 0, false});
    for (int L : {3, 5, 8}) out.push_back({Mode::hop, w, L, false});
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// 1. Every enumerator and strategy counts 2^(n-2) cycles on exp-cycles(n).
Outcome count_identity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t runs = 0;
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto g = exp_cycles(n);
    const std::uint64_t want = std::uint64_t{1} << (n - 2);
    for (const Constraints& c : {Constraints{}, Constraints{Mode::hop, {}, static_cast<int>(n), false}}) {
      for (Algorithm a : {Algorithm::tiernan, Algorithm::johnson, Algorithm::read_tarjan}) {
        if (c.mode == Mode::hop && a == Algorithm::read_tarjan) continue;
        for (Parallelism par : {Parallelism::seq, Parallelism::coarse, Parallelism::fine}) {
          if (a == Algorithm::tiernan && par == Parallelism::fine) continue;
          for (CopyOnSteal cos : {CopyOnSteal::recursive, CopyOnSteal::complete}) {
            if (par != Parallelism::fine && cos == CopyOnSteal::complete) continue;
            EngineConfig cfg;
            cfg.algo = a;
            cfg.parallel = par;
            cfg.fine.threads = par == Parallelism::seq ? 1 : 4;
            cfg.fine.cos = cos;
            CountingSink s;
            run_engine(g, c, cfg, &s);
            ++runs;
            if (s.cycles() != want) {
              o.fail("n=" + std::to_string(n) + " " + describe(c, cfg) + " counted " + std::to_string(s.cycles()));
            }
          }
        }
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  o.detail << (o.pass ? "" : "; ") << runs << " runs in " << secs << " s";
  return o;
}

// 2. Oracle equivalence over the seeded random corpus.
Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  MatrixOptions mo;
  mo.both_bundle_settings = true;
  const auto cases = verify_matrix(mo);
  const auto graphs = corpus::random_graphs(200);
  for (std::size_t i = 0; i < graphs.size() && o.pass; ++i) {
    for (const auto& c : corpus_constraints()) {
      if (reference_cycles(graphs[i], c) != oracle::cycles(graphs[i], c)) {
        o.fail("reference disagrees with brute force on graph " + std::to_string(i));
      }
    }
    if (auto mm = verify_graph(graphs[i], cases)) {
      o.fail("graph " + std::to_string(i) + ": " + mm->which.label + " expected " +
             std::to_string(mm->expected.size()) + " got " + std::to_string(mm->actual.size()));
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 600) o.fail("took " + std::to_string(secs) + " s");
  o.detail << (o.pass ? "" : "; ") << graphs.size() << " graphs x " << cases.size() << " configurations in " << secs
           << " s";
  return o;
}

// 3. Forcing any single task to be stolen leaves the result unchanged.
Outcome injector_sweep() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto graphs = corpus::random_graphs(20, 11);
  std::size_t runs = 0;
  struct Cfg {
    bool rt;
    Constraints c;
    CopyOnSteal cos;
  };
  std::vector<Cfg> cfgs;
  for (CopyOnSteal cos : {CopyOnSteal::recursive, CopyOnSteal::complete}) {
    cfgs.push_back({false, {Mode::simple, {}, 0, false}, cos});
    cfgs.push_back({false, {Mode::temporal, 5, 0, false}, cos});
    cfgs.push_back({false, {Mode::hop, {}, 5, false}, cos});
  }
  cfgs.push_back({true, {Mode::simple, {}, 0, false}, CopyOnSteal::recursive});
  cfgs.push_back({true, {Mode::temporal, 5, 0, false}, CopyOnSteal::recursive});
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& g = graphs[gi];
    for (const auto& cf : cfgs) {
      const auto want = reference_cycles(g, cf.c);
      auto run = [&](FineOptions fo) {
        fo.cos = cf.cos;
        CollectingSink s(cf.c.mode);
        if (cf.rt) {
          fgrt_enumerate(g, cf.c, &s, fo);
        } else {
          fgj_enumerate(g, cf.c, &s, fo);
        }
        return s.cycles();
      };
      std::vector<std::uint64_t> ids;
      FineOptions probe;
      probe.on_spawn = [&](std::uint64_t id, VertexId, std::size_t) { ids.push_back(id); };
      run(probe);
      for (std::uint64_t id : ids) {
        for (std::uint64_t delay : {0, 3}) {
          FineOptions fo;
          fo.inject = StealInjection{id, delay};
          bool stolen = false;
          fo.on_steal = [&](const StealEvent&) { stolen = true; };
          const auto got = run(fo);
          ++runs;
          if (got != want) {
            o.fail("graph " + std::to_string(gi) + (cf.rt ? " read-tarjan" : " johnson") + " task " +
                   std::to_string(id) + " delay " + std::to_string(delay));
          }
          if (!stolen) o.fail("task " + std::to_string(id) + " was not stolen");
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << runs << " injected runs in " << seconds_since(start) << " s";
  return o;
}

// 4. Fine-grained Read-Tarjan stays near sequential work; coarse work is
// independent of the worker count.
Outcome work_efficiency() {
  Outcome o;
  double worst = 0;
  for (const auto& g : corpus::random_graphs(200)) {
    for (const Constraints& c : {Constraints{}, Constraints{Mode::temporal, 5, 0, false}}) {
      FineOptions one, eight;
      eight.threads = 8;
      CountingSink a, b;
      const auto m1 = fgrt_enumerate(g, c, &a, one);
      const auto m8 = fgrt_enumerate(g, c, &b, eight);
      if (m1.visits.edge_visits > 0) {
        worst = std::max(worst, static_cast<double>(m8.visits.edge_visits) / static_cast<double>(m1.visits.edge_visits));
      }
      if (static_cast<double>(m8.visits.edge_visits) > 1.5 * static_cast<double>(m1.visits.edge_visits)) {
        o.fail("fgrt visits grew from " + std::to_string(m1.visits.edge_visits) + " to " +
               std::to_string(m8.visits.edge_visits));
      }
    }
    const std::vector<std::pair<CoarseAlgo, Constraints>> coarse_cases{
        {CoarseAlgo::johnson, {}},
        {CoarseAlgo::read_tarjan, {}},
        {CoarseAlgo::temporal_johnson, {Mode::temporal, 5, 0, false}},
        {CoarseAlgo::hop_johnson, {Mode::hop, {}, 5, false}}};
    for (const auto& [algo, c] : coarse_cases) {
      std::optional<std::uint64_t> base;
      for (int p : {1, 2, 8}) {
        CoarseOptions co;
        co.threads = p;
        CountingSink s;
        const auto m = coarse_enumerate(g, c, algo, &s, co);
        if (!base) base = m.visits.edge_visits;
        if (m.visits.edge_visits != *base) o.fail("coarse visits depend on the worker count");
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << "worst fgrt visit ratio p=8/p=1 " << worst;
  return o;
}

// 5. Forced steals into an infeasible region inflate fine-grained Johnson's work.
Outcome work_inflation() {
  Outcome o;
  const std::size_t c = 8, m = 24;
  const auto g = infeasible_region(c, m);
  auto visits = [&](int p) {
    FineOptions fo;
    fo.threads = p;
    fo.prune = Pruning::none;
    fo.force_steal = [&](VertexId v, std::size_t) { return v >= 3 && v < 3 + c; };
    CountingSink s;
    const auto r = fgj_enumerate(g, {}, &s, fo);
    if (s.cycles() != c) o.fail("wrong cycle count");
    return r.visits.edge_visits;
  };
  const auto v1 = visits(1), v8 = visits(8);
  if (!(v8 > v1)) o.fail("no inflation");
  o.detail << (o.pass ? "" : "; ") << "edge visits p=1 " << v1 << ", p=8 " << v8;
  return o;
}

// 6. Wall-time speedup on exp-cycles(20).
Outcome scalability() {
  Outcome o;
  const auto g = exp_cycles(20);
  auto wall = [&](const std::function<MetricsSnapshot(int, CountingSink*)>& f, int p) {
    std::uint64_t best = 0;
    for (int r = 0; r < 2; ++r) {
      CountingSink s;
      const auto m = f(p, &s);
      if (s.cycles() != 262144) o.fail("wrong count");
      if (r == 0 || m.wall_ns < best) best = m.wall_ns;
    }
    return static_cast<double>(best);
  };
  auto fgj = [&](int p, CountingSink* s) {
    FineOptions fo;
    fo.threads = p;
    return fgj_enumerate(g, {}, s, fo);
  };
  auto fgrt = [&](int p, CountingSink* s) {
    FineOptions fo;
    fo.threads = p;
    return fgrt_enumerate(g, {}, s, fo);
  };
  auto coarse = [&](int p, CountingSink* s) {
    CoarseOptions co;
    co.threads = p;
    return coarse_enumerate(g, {}, CoarseAlgo::johnson, s, co);
  };
  const double sj = wall(fgj, 1) / wall(fgj, 8);
  const double sr = wall(fgrt, 1) / wall(fgrt, 8);
  const double sc = wall(coarse, 1) / wall(coarse, 8);
  if (sj < 3.0) o.fail("fgj speedup below 3");
  if (sr < 3.0) o.fail("fgrt speedup below 3");
  if (sc > 1.3) o.fail("coarse speedup above 1.3");
  if (!(std::min(sj, sr) > sc)) o.fail("fine not faster than coarse");
  o.detail << (o.pass ? "" : "; ") << "speedup at 8 workers: fgj " << sj << ", fgrt " << sr << ", coarse " << sc
           << " (hardware threads: " << std::thread::hardware_concurrency() << ")";
  return o;
}

// 7. Busy-time balance on a skewed graph with 8 workers.
Outcome load_balance() {
  Outcome o;
  const auto g = skewed(18, 10000, 2.0, 17);
  FineOptions fo;
  fo.threads = 8;
  CountingSink a, b;
  const auto fine = fgj_enumerate(g, {}, &a, fo);
  CoarseOptions co;
  co.threads = 8;
  const auto coarse = coarse_enumerate(g, {}, CoarseAlgo::johnson, &b, co);
  const double cf = busy_time_cv(fine), cc = busy_time_cv(coarse);
  if (a.cycles() != b.cycles() || a.cycles() < (1u << 16)) o.fail("cycle counts differ");
  if (!(cf < 0.3)) o.fail("fine CV not below 0.3");
  if (!(cc > 1.0)) o.fail("coarse CV not above 1.0");
  o.detail << (o.pass ? "" : "; ") << "busy-time CV fine " << cf << ", coarse " << cc;
  return o;
}

// 8. Read-Tarjan pruning switches never add work and help on the trap graph.
Outcome pruning_improvements() {
  Outcome o;
  auto run = [](const TemporalGraph& g, const Constraints& c, const RtOptions& rt, Pruning p) {
    SeqOptions so;
    so.prune = p;
    CountingSink s;
    const auto t = std::chrono::steady_clock::now();
    const auto v = c.mode == Mode::temporal ? temporal_read_tarjan_enumerate(g, c, rt, &s, so)
                                            : read_tarjan_enumerate(g, c, rt, &s, so);
    return std::pair{v.edge_visits, seconds_since(t)};
  };
  for (const auto& g : corpus::random_graphs(200)) {
    for (const Constraints& c : {Constraints{}, Constraints{Mode::simple, 5, 0, false},
                                 Constraints{Mode::temporal, {}, 0, false}}) {
      for (Pruning p : {Pruning::none, Pruning::automatic}) {
        if (run(g, c, {}, p).first > run(g, c, RtOptions::all_off(), p).first) {
          o.fail("switches increased visits on a corpus graph");
        }
      }
    }
  }
  const auto trap = extension_trap(12, 120);
  const auto on = run(trap, {}, {}, Pruning::none);
  const auto off = run(trap, {}, RtOptions::all_off(), Pruning::none);
  double t_on = on.second, t_off = off.second;
  for (int r = 0; r < 2; ++r) {
    t_on = std::min(t_on, run(trap, {}, {}, Pruning::none).second);
    t_off = std::min(t_off, run(trap, {}, RtOptions::all_off(), Pruning::none).second);
  }
  if (!(on.first < off.first)) o.fail("no visit reduction on the trap graph");
  if (!(t_off >= 1.1 * t_on)) o.fail("wall-time gain below 1.1x");
  o.detail << (o.pass ? "" : "; ") << "trap graph edge visits on " << on.first << " vs off " << off.first
           << ", wall-time gain " << t_off / t_on;
  return o;
}

// 9. Constrained-mode semantics and bundle accounting.
Outcome constrained_semantics() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : corpus::random_graphs(200)) {
    for (const auto& c : corpus_constraints()) {
      for (Parallelism par : {Parallelism::seq, Parallelism::fine}) {
        EngineConfig cfg;
        cfg.parallel = par;
        cfg.fine.threads = par == Parallelism::fine ? 4 : 1;
        CollectingSink bundled(c.mode);
        run_engine(g, c, cfg, &bundled);
        cfg.fine.bundles = false;
        CollectingSink single(c.mode);
        run_engine(g, c, cfg, &single);
        const auto singles = single.cycles();

        std::vector<CycleRecord> expanded;
        std::uint64_t counted = 0;
        for (const auto& b : bundled.bundles()) {
          const auto ex = bundle_expand(b, c.mode);
          if (ex.size() != bundle_count(b, c.mode)) o.fail("bundle_count differs from expansion");
          counted += bundle_count(b, c.mode);
          for (const auto& r : ex) expanded.push_back(canonical(r));
        }
        std::sort(expanded.begin(), expanded.end());
        if (expanded != singles || counted != singles.size()) o.fail("bundled and single-edge runs differ");

        for (const auto& cyc : singles) {
          ++checked;
          const std::size_t k = cyc.ts.size();
          const auto lo = std::min_element(cyc.ts.begin(), cyc.ts.end());
          const auto hi = std::max_element(cyc.ts.begin(), cyc.ts.end());
          if (c.window && *hi - *lo > *c.window) o.fail("cycle leaves its window");
          if (c.mode == Mode::hop && static_cast<int>(k) > c.max_hops) o.fail("hop cycle too long");
          if (c.mode == Mode::temporal) {
            const std::size_t s = static_cast<std::size_t>(lo - cyc.ts.begin());
            for (std::size_t i = 1; i < k; ++i) {
              if (!(cyc.ts[(s + i) % k] > cyc.ts[(s + i - 1) % k])) o.fail("temporal cycle not increasing");
            }
          }
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " cycles checked";
  return o;
}

// 10. Single-worker fine-grained traces equal the sequential ones.
Outcome degeneracy_traces() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& g : corpus::random_graphs(20, 19)) {
    for (const Constraints& c : {Constraints{}, Constraints{Mode::simple, 5, 0, false},
                                 Constraints{Mode::temporal, {}, 0, false}, Constraints{Mode::temporal, 5, 0, false},
                                 Constraints{Mode::hop, {}, 5, false}}) {
      {
        EventTrace seq, fine;
        SeqOptions so;
        so.trace = &seq;
        CountingSink a, b;
        if (c.mode == Mode::simple) johnson_enumerate(g, c, &a, so);
        if (c.mode == Mode::temporal) temporal_johnson_enumerate(g, c, &a, so);
        if (c.mode == Mode::hop) hop_johnson_enumerate(g, c, &a, so);
        FineOptions fo;
        fo.trace = &fine;
        fgj_enumerate(g, c, &b, fo);
        ++compared;
        if (seq.events != fine.events) o.fail("johnson trace differs");
      }
      if (c.mode == Mode::hop) continue;
      for (const auto& rt : {RtOptions{}, RtOptions::all_off()}) {
        EventTrace seq, fine;
        SeqOptions so;
        so.trace = &seq;
        CountingSink a, b;
        if (c.mode == Mode::simple) {
          read_tarjan_enumerate(g, c, rt, &a, so);
        } else {
          temporal_read_tarjan_enumerate(g, c, rt, &a, so);
        }
        FineOptions fo;
        fo.rt = rt;
        fo.trace = &fine;
        fgrt_enumerate(g, c, &b, fo);
        ++compared;
        if (seq.events != fine.events) o.fail("read-tarjan trace differs");
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << compared << " trace pairs compared";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s CRITERION (1-10)\n", argv[0]);
    return 2;
  }
  const int n = std::atoi(argv[1]);
  const std::vector<std::function<Outcome()>> checks{
      count_identity,   oracle_equivalence,   injector_sweep,        work_efficiency,   work_inflation,
      scalability,      load_balance,         pruning_improvements,  constrained_semantics, degeneracy_traces};
  if (n < 1 || n > static_cast<int>(checks.size())) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  Outcome o;
  try {
    o = checks[static_cast<std::size_t>(n - 1)]();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
  return o.pass ? 0 : 1;
}
