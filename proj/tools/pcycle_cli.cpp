#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcycle/engine.hpp"
#include "pcycle/generators.hpp"
#include "pcycle/verify.hpp"

using namespace pcycle;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr const char* kThreadsEnv = "PCYCLE_THREADS";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunFlags {
  std::string input;
  bool untimed = false;
  std::string mode = "simple";
  std::optional<int> hops;
  std::optional<long long> window;
  std::string algo = "johnson";
  std::string parallel = "seq";
  std::string grain = "edge";
  std::optional<int> threads;
  std::string cos = "recursive";
  std::string bundles = "on";
  std::string prune;
  std::string emit = "count";
  std::string metrics;
  std::uint64_t seed = 0;
  bool nondecreasing = false;
};

void add_run_flags(CLI::App* app, RunFlags& f, bool with_output) {
  app->add_option("--input", f.input, "Edge list: one 'src dst ts' per line");
  app->add_flag("--untimed", f.untimed, "Input lines have no timestamp column");
  app->add_option("--mode", f.mode, "Cycle kind")->check(CLI::IsMember({"simple", "temporal", "hop"}));
  app->add_option("--hops", f.hops, "Hop limit L (hop mode)");
  app->add_option("--window", f.window, "Time window length delta");
  app->add_option("--algo", f.algo, "Enumerator")->check(CLI::IsMember({"tiernan", "johnson", "read-tarjan"}));
  app->add_option("--parallel", f.parallel, "Execution strategy")->check(CLI::IsMember({"seq", "coarse", "fine"}));
  app->add_option("--grain", f.grain, "Coarse work unit")->check(CLI::IsMember({"vertex", "edge"}));
  app->add_option("--threads", f.threads, std::string("Worker count (default: $") + kThreadsEnv + " or 1)");
  app->add_option("--cos", f.cos, "Copy-on-steal unblocking")->check(CLI::IsMember({"recursive", "complete"}));
  app->add_option("--bundles", f.bundles, "Report parallel-edge bundles")->check(CLI::IsMember({"on", "off"}));
  app->add_option("--prune", f.prune, "Per-search pruning")->check(CLI::IsMember({"none", "scc", "cycle-union"}));
  if (with_output) {
    app->add_option("--emit", f.emit, "Output")->check(CLI::IsMember({"count", "histogram", "cycles", "bundles"}));
    app->add_option("--metrics", f.metrics, "Write metrics (JSON, or CSV for a .csv path)");
  }
  app->add_option("--seed", f.seed, "Scheduler seed");
  app->add_flag("--temporal-nondecreasing", f.nondecreasing, "Allow equal consecutive timestamps");
}

int default_threads() {
  if (const char* s = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw UsageError(std::string(kThreadsEnv) + " must be a positive integer");
  }
  return 1;
}

Constraints make_constraints(const RunFlags& f) {
  Constraints c;
  c.mode = f.mode == "temporal" ? Mode::temporal : f.mode == "hop" ? Mode::hop : Mode::simple;
  if (c.mode == Mode::hop) {
    if (!f.hops) throw UsageError("--mode hop requires --hops L");
    c.max_hops = *f.hops;
  } else if (f.hops) {
    throw UsageError("--hops requires --mode hop");
  }
  if (f.window) c.window = *f.window;
  c.nondecreasing = f.nondecreasing;
  return c;
}

EngineConfig make_config(const RunFlags& f) {
  EngineConfig cfg;
  cfg.algo = f.algo == "tiernan" ? Algorithm::tiernan : f.algo == "read-tarjan" ? Algorithm::read_tarjan : Algorithm::johnson;
  cfg.parallel = f.parallel == "coarse" ? Parallelism::coarse : f.parallel == "fine" ? Parallelism::fine : Parallelism::seq;
  cfg.grain = f.grain == "vertex" ? Grain::vertex : Grain::edge;
  cfg.fine.threads = f.threads ? *f.threads : default_threads();
  if (cfg.parallel == Parallelism::seq) cfg.fine.threads = 1;
  cfg.fine.cos = f.cos == "complete" ? CopyOnSteal::complete : CopyOnSteal::recursive;
  cfg.fine.bundles = f.bundles == "on";
  if (f.prune == "none") cfg.fine.prune = Pruning::none;
  if (f.prune == "scc") cfg.fine.prune = Pruning::scc;
  if (f.prune == "cycle-union") cfg.fine.prune = Pruning::cycle_union;
  cfg.fine.seed = f.seed;
  return cfg;
}

TemporalGraph load_input(const std::string& path, bool untimed) {
  if (path.empty()) throw UsageError("--input PATH is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  return load_edge_list(in, IngestOptions{untimed});
}

json original_vertices(const TemporalGraph& g, const std::vector<VertexId>& vs) {
  json a = json::array();
  const auto& ids = g.original_ids();
  for (VertexId v : vs) a.push_back(v < ids.size() ? ids[v] : static_cast<std::int64_t>(v));
  return a;
}

void write_metrics(const std::string& path, const MetricsSnapshot& m) {
  if (path.empty()) return;
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write metrics file: " + path);
  out << export_metrics(m, csv ? ExportFormat::csv : ExportFormat::json);
}

int cmd_enumerate(const RunFlags& f) {
  const Constraints c = make_constraints(f);
  const EngineConfig cfg = make_config(f);
  check_config(c, cfg);
  const TemporalGraph g = load_input(f.input, f.untimed);
  MetricsSnapshot m;
  if (f.emit == "count" || f.emit == "histogram") {
    CountingSink sink;
    m = run_engine(g, c, cfg, &sink);
    json out;
    out["cycles"] = sink.cycles();
    out["bundles"] = sink.bundles();
    if (f.emit == "histogram") {
      json h = json::object();
      for (auto [len, cnt] : sink.histogram()) h[std::to_string(len)] = cnt;
      out["histogram"] = h;
    }
    std::cout << out.dump() << '\n';
  } else {
    CollectingSink sink(c.mode, c.nondecreasing);
    m = run_engine(g, c, cfg, &sink);
    const auto cycles = sink.cycles();
    if (f.emit == "cycles") {
      for (const auto& r : cycles) {
        json line;
        line["cycle"] = original_vertices(g, r.vertices);
        line["ts"] = r.ts;
        std::cout << line.dump() << '\n';
      }
    } else {
      auto bundles = sink.bundles();
      std::sort(bundles.begin(), bundles.end(), [](const CycleBundle& a, const CycleBundle& b) {
        return std::tie(a.vertices, a.hops, a.start_ts) < std::tie(b.vertices, b.hops, b.start_ts);
      });
      for (const auto& b : bundles) {
        json line;
        line["bundle"] = original_vertices(g, b.vertices);
        line["hops"] = b.hops;
        line["count"] = bundle_count(b, c.mode, c.nondecreasing);
        std::cout << line.dump() << '\n';
      }
    }
    json summary;
    summary["cycles"] = cycles.size();
    summary["bundles"] = m.bundles_reported;
    std::cout << summary.dump() << '\n';
  }
  write_metrics(f.metrics, m);
  return kOk;
}

struct GenFlags {
  std::string family = "exp-cycles";
  std::size_t n = 6, m = 4, k = 4;
  double p = 0.3;
  double degree = 1.5;
  long long ts_max = 20;
  std::uint64_t seed = 1;
};

void add_gen_flags(CLI::App* app, GenFlags& f) {
  app->add_option("--family", f.family, "Graph family")
      ->check(CLI::IsMember({"exp-cycles", "blocked-tail", "random", "infeasible-region", "extension-trap", "skewed"}));
  app->add_option("--n", f.n, "Vertex count / core size");
  app->add_option("--m", f.m, "Detour pairs, branches or background size");
  app->add_option("--k", f.k, "Tail or region length");
  app->add_option("--p", f.p, "Edge probability (random)");
  app->add_option("--degree", f.degree, "Background out-degree (skewed)");
  app->add_option("--ts-max", f.ts_max, "Largest timestamp (random)");
  app->add_option("--gen-seed", f.seed, "Generator seed");
}

TemporalGraph generate(const GenFlags& f) {
  if (f.family == "blocked-tail") return blocked_tail(f.m, f.k);
  if (f.family == "random") return random_graph({f.n, f.p, f.ts_max, 0.25, f.seed});
  if (f.family == "infeasible-region") return infeasible_region(f.m, f.k);
  if (f.family == "extension-trap") return extension_trap(f.n, f.k);
  if (f.family == "skewed") return skewed(f.n, f.m, f.degree, f.seed);
  return exp_cycles(f.n);
}

int cmd_gen(const GenFlags& f, const std::string& out_path) {
  const TemporalGraph g = generate(f);
  if (out_path.empty() || out_path == "-") {
    save_edge_list(g, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write output file: " + out_path);
    save_edge_list(g, out);
  }
  return kOk;
}

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const int v = std::stoi(tok);
      if (v < 1) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects a comma-separated list of positive integers");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " must not be empty");
  return out;
}

int cmd_bench(const RunFlags& f, const GenFlags& gf, bool use_gen, const std::string& thread_list, int repeat,
              const std::string& csv_path) {
  const Constraints c = make_constraints(f);
  EngineConfig cfg = make_config(f);
  const auto threads = parse_int_list(thread_list, "--threads-list");
  if (repeat < 1) throw UsageError("--repeat must be at least 1");
  const TemporalGraph g = use_gen ? generate(gf) : load_input(f.input, f.untimed);
  json rows = json::array();
  std::ostringstream csv;
  csv << "threads,worker,busy_ns\n";
  double base_ms = 0;
  for (int p : threads) {
    cfg.fine.threads = p;
    check_config(c, cfg);
    MetricsSnapshot best;
    std::uint64_t cycles = 0;
    for (int r = 0; r < repeat; ++r) {
      CountingSink sink;
      MetricsSnapshot m = run_engine(g, c, cfg, &sink);
      cycles = sink.cycles();
      if (r == 0 || m.wall_ns < best.wall_ns) best = m;
    }
    const double ms = static_cast<double>(best.wall_ns) / 1e6;
    if (rows.empty()) base_ms = ms;
    json row;
    row["threads"] = p;
    row["wall_ms"] = ms;
    row["speedup"] = ms > 0 ? base_ms / ms : 0.0;
    row["cycles"] = cycles;
    row["edge_visits"] = best.visits.edge_visits;
    row["tasks_spawned"] = best.tasks_spawned;
    row["tasks_stolen"] = best.tasks_stolen;
    row["busy_cv"] = busy_time_cv(best);
    rows.push_back(row);
    for (std::size_t w = 0; w < best.busy_ns.size(); ++w) csv << p << ',' << w << ',' << best.busy_ns[w] << '\n';
  }
  json out;
  out["graph"] = {{"n", g.num_vertices()}, {"e", g.num_edges()}};
  out["config"] = describe(c, cfg);
  out["rows"] = rows;
  out["busy_csv"] = csv_path;
  std::cout << out.dump(2) << '\n';
  std::ofstream cf(csv_path);
  if (!cf) throw UsageError("cannot write busy-time CSV: " + csv_path);
  cf << csv.str();
  return kOk;
}

json records_json(const std::vector<CycleRecord>& rs, std::size_t limit) {
  json a = json::array();
  for (std::size_t i = 0; i < rs.size() && i < limit; ++i) a.push_back({{"cycle", rs[i].vertices}, {"ts", rs[i].ts}});
  return a;
}

int cmd_verify(const RunFlags& f, bool mode_given, bool algo_given, bool parallel_given, int graphs,
               std::size_t max_n, double edge_prob, const std::string& dump_path) {
  MatrixOptions mo;
  mo.seed = f.seed;
  mo.both_bundle_settings = true;
  if (mode_given) {
    const Constraints c = make_constraints(f);
    mo.modes = {c.mode};
    if (c.mode == Mode::hop) mo.hop_limits = {c.max_hops};
  }
  if (f.window) mo.windows = {*f.window};
  if (f.threads) mo.fine_threads = {*f.threads};
  auto cases = verify_matrix(mo);
  const EngineConfig want = make_config(f);
  std::erase_if(cases, [&](const VerifyCase& vc) {
    return (algo_given && vc.config.algo != want.algo) || (parallel_given && vc.config.parallel != want.parallel);
  });
  if (cases.empty()) throw UsageError("no configuration matches the given --mode/--algo/--parallel filters");

  std::vector<TemporalGraph> inputs;
  if (!f.input.empty()) {
    inputs.push_back(load_input(f.input, f.untimed));
  } else {
    if (max_n < 3) throw UsageError("--max-n must be at least 3");
    for (int i = 0; i < graphs; ++i) {
      RandomGraphParams rp;
      rp.seed = f.seed * 1000003ull + static_cast<std::uint64_t>(i) + 1;
      rp.n = 3 + static_cast<std::size_t>(rp.seed % (max_n - 2));
      rp.edge_prob = edge_prob;
      inputs.push_back(random_graph(rp));
    }
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto mm = verify_graph(inputs[i], cases);
    if (!mm) continue;
    const Mismatch small = shrink(*mm);
    json rep;
    rep["status"] = "mismatch";
    rep["graph_index"] = i;
    rep["config"] = small.which.label;
    json edges = json::array();
    for (const auto& e : small.graph.edges()) edges.push_back({e.src, e.dst, e.ts});
    rep["edges"] = edges;
    rep["expected_count"] = small.expected.size();
    rep["actual_count"] = small.actual.size();
    rep["expected"] = records_json(small.expected, 20);
    rep["actual"] = records_json(small.actual, 20);
    std::cout << rep.dump() << '\n';
    if (!dump_path.empty()) {
      std::ofstream out(dump_path);
      out << "# reproduce with: pcycle enumerate --input " << dump_path << ' ' << small.which.label
          << " --emit cycles\n";
      save_edge_list(small.graph, out);
    }
    return kMismatch;
  }
  json ok;
  ok["status"] = "ok";
  ok["graphs"] = inputs.size();
  ok["configs"] = cases.size();
  std::cout << ok.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle enumeration in directed temporal graphs"};
  app.require_subcommand(1);

  RunFlags enum_flags;
  auto* en = app.add_subcommand("enumerate", "Enumerate cycles of one graph");
  add_run_flags(en, enum_flags, true);

  RunFlags ver_flags;
  int graphs = 200;
  std::size_t max_n = 10;
  double edge_prob = 0.3;
  std::string dump_path;
  auto* ve = app.add_subcommand("verify", "Compare enumerators against the reference on random graphs");
  add_run_flags(ve, ver_flags, false);
  ve->add_option("--graphs", graphs, "Number of random graphs");
  ve->add_option("--max-n", max_n, "Largest random graph size");
  ve->add_option("--edge-prob", edge_prob, "Random edge probability");
  ve->add_option("--dump", dump_path, "Write the reduced failing graph here");

  RunFlags bench_flags;
  GenFlags bench_gen;
  std::string thread_list = "1,2,4,8";
  int repeat = 1;
  std::string csv_path = "bench_busy.csv";
  auto* be = app.add_subcommand("bench", "Time one configuration over several thread counts");
  add_run_flags(be, bench_flags, false);
  add_gen_flags(be, bench_gen);
  be->add_option("--threads-list", thread_list, "Comma-separated thread counts");
  be->add_option("--repeat", repeat, "Runs per thread count; the fastest is kept");
  be->add_option("--csv", csv_path, "Per-worker busy-time CSV output");

  GenFlags gen_flags;
  std::string out_path;
  auto* ge = app.add_subcommand("gen", "Write a generated graph as an edge list");
  add_gen_flags(ge, gen_flags);
  ge->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(enum_flags);
    if (*ve)
      return cmd_verify(ver_flags, ve->count("--mode") > 0, ve->count("--algo") > 0, ve->count("--parallel") > 0,
                        graphs, max_n, edge_prob, dump_path);
    if (*be) return cmd_bench(bench_flags, bench_gen, be->count("--family") > 0, thread_list, repeat, csv_path);
    if (*ge) return cmd_gen(gen_flags, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
