#include <doctest.h>

#include "corpus.hpp"
#include "johnson_core.hpp"
#include "oracle.hpp"
#include "pcycle/enum_seq.hpp"
#include "pcycle/generators.hpp"

using namespace pcycle;

namespace {

using Enumerate = std::function<VisitCounters(const TemporalGraph&, const Constraints&, CycleSink*, const SeqOptions&)>;

std::vector<CycleRecord> run(const Enumerate& f, const TemporalGraph& g, const Constraints& c, SeqOptions o = {}) {
  CollectingSink sink(c.mode, c.nondecreasing);
  f(g, c, &sink, o);
  return sink.cycles();
}

std::vector<RtOptions> all_rt_combos() {
  std::vector<RtOptions> out;
  for (int m = 0; m < 8; ++m) out.push_back({(m & 1) != 0, (m & 2) != 0, (m & 4) != 0});
  return out;
}

}  // namespace

TEST_CASE("triangle: every enumerator finds the single cycle") {
  auto g = TemporalGraph::from_edges(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  const Constraints c;
  const std::vector<CycleRecord> want{{{0, 1, 2}, {1, 2, 3}}};
  CHECK(run(tiernan_enumerate, g, c) == want);
  CHECK(run(johnson_enumerate, g, c) == want);
  for (const auto& rt : all_rt_combos()) {
    CollectingSink s(Mode::simple);
    read_tarjan_enumerate(g, c, rt, &s);
    CHECK(s.cycles() == want);
  }
}

TEST_CASE("sequential enumerators match the brute-force oracle on the corpus") {
  const auto graphs = corpus::random_graphs(60, 3);
  for (std::optional<Timestamp> w : {std::optional<Timestamp>{}, std::optional<Timestamp>{2}, std::optional<Timestamp>{5}}) {
    const Constraints c{Mode::simple, w, 0, false};
    for (const auto& g : graphs) {
      const auto want = oracle::cycles(g, c);
      for (Pruning p : {Pruning::none, Pruning::scc}) {
        for (bool bundles : {true, false}) {
          SeqOptions o;
          o.prune = p;
          o.bundles = bundles;
          CHECK(run(tiernan_enumerate, g, c, o) == want);
          CHECK(run(johnson_enumerate, g, c, o) == want);
          for (const auto& rt : all_rt_combos()) {
            CollectingSink s(Mode::simple);
            read_tarjan_enumerate(g, c, rt, &s, o);
            CHECK(s.cycles() == want);
          }
        }
      }
    }
  }
}

TEST_CASE("exp-cycles counts for all sequential enumerators") {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto g = exp_cycles(n);
    const std::uint64_t want = std::uint64_t{1} << (n - 2);
    CountingSink a, b, r;
    tiernan_enumerate(g, {}, &a);
    johnson_enumerate(g, {}, &b);
    read_tarjan_enumerate(g, {}, {}, &r);
    CHECK(a.cycles() == want);
    CHECK(b.cycles() == want);
    CHECK(r.cycles() == want);
  }
}

TEST_CASE("recursive unblock cascades through unblock lists and skips the path") {
  auto g = TemporalGraph::from_edges(6, {{0, 1, 0}});
  Constraints c;
  SearchContext ctx(g, c, {0, 1, 0, 0});
  detail::SimpleCore s(6);
  s.debug_push(0);
  for (VertexId v : {2, 3, 4, 5}) s.debug_block(v, 3);
  s.debug_blist_add(2, 3);  // unblocking 2 releases 3
  s.debug_blist_add(3, 4);  // which releases 4
  s.unblock(2, nullptr);
  CHECK_FALSE(s.is_blocked(2));
  CHECK_FALSE(s.is_blocked(3));
  CHECK_FALSE(s.is_blocked(4));
  CHECK(s.is_blocked(5));
  CHECK(s.blist(2).empty());
  CHECK(s.blist(3).empty());
  // Vertices on the path stay blocked even when listed.
  s.debug_block(5, 3);
  s.debug_blist_add(5, 0);
  s.unblock(5, nullptr);
  CHECK(s.is_blocked(0));
}

TEST_CASE("copy-on-steal pops the diverged suffix") {
  auto g = TemporalGraph::from_edges(3, {{0, 1, 0}, {1, 2, 0}});
  detail::SimpleCore s(3);
  for (VertexId v : {0, 1, 2}) s.debug_push(v);
  auto rec = s;
  rec.copy_on_steal(3, detail::CosVariant::recursive, nullptr);
  CHECK(rec.path() == std::vector<VertexId>{0, 1});
  CHECK(rec.is_blocked(0));
  CHECK(rec.is_blocked(1));
  CHECK_FALSE(rec.is_blocked(2));
  auto verbatim = s;
  verbatim.copy_on_steal(4, detail::CosVariant::recursive, nullptr);
  CHECK(verbatim.path() == std::vector<VertexId>{0, 1, 2});
  CHECK(verbatim.is_blocked(2));
  auto comp = s;
  comp.copy_on_steal(3, detail::CosVariant::complete, nullptr);
  CHECK(comp.path() == std::vector<VertexId>{0, 1});
  CHECK_FALSE(comp.is_blocked(2));
}

TEST_CASE("Johnson visits the dead-end tail once, Tiernan once per detour") {
  auto g = blocked_tail(6, 30);
  SeqOptions o;
  o.prune = Pruning::none;
  CountingSink a, b;
  auto vt = tiernan_enumerate(g, {}, &a, o);
  auto vj = johnson_enumerate(g, {}, &b, o);
  CHECK(a.cycles() == 12);
  CHECK(b.cycles() == 12);
  CHECK(vj.edge_visits < vt.edge_visits);
  CHECK(vt.edge_visits >= 12 * 30);
}

TEST_CASE("Read-Tarjan traces on a triangle: one extension search, no probes") {
  auto g = TemporalGraph::from_edges(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
  EventTrace t;
  SeqOptions o;
  o.trace = &t;
  CountingSink s;
  read_tarjan_enumerate(g, {}, {}, &s, o);
  CHECK(s.cycles() == 1);
  const std::vector<TraceEvent> want{{TraceEvent::dfs, 1}, {TraceEvent::dfs, 2}, {TraceEvent::enter, 1},
                                     {TraceEvent::enter, 2}, {TraceEvent::cycle, 2}};
  CHECK(t.events == want);
}

TEST_CASE("Read-Tarjan spawns one task per extension on a two-branch graph") {
  // 0 -> 1 -> {2, 3} -> 0: two cycles sharing the prefix 0 -> 1.
  auto g = TemporalGraph::from_edges(4, {{0, 1, 0}, {1, 2, 0}, {1, 3, 0}, {2, 0, 0}, {3, 0, 0}});
  EventTrace t;
  SeqOptions o;
  o.trace = &t;
  CountingSink s;
  read_tarjan_enumerate(g, {}, {}, &s, o);
  CHECK(s.cycles() == 2);
  CHECK(std::count(t.events.begin(), t.events.end(), TraceEvent{TraceEvent::cycle, 2}) == 1);
  CHECK(std::count(t.events.begin(), t.events.end(), TraceEvent{TraceEvent::cycle, 3}) == 1);
}

TEST_CASE("pruning switches never add work on the extension trap") {
  auto g = extension_trap(8, 40);
  CountingSink on, off;
  SeqOptions o;
  o.prune = Pruning::none;
  auto v_on = read_tarjan_enumerate(g, {}, {}, &on, o);
  auto v_off = read_tarjan_enumerate(g, {}, RtOptions::all_off(), &off, o);
  CHECK(on.cycles() == 64);
  CHECK(off.cycles() == 64);
  CHECK(v_on.edge_visits < v_off.edge_visits);
}

TEST_CASE("wrong modes are rejected") {
  auto g = exp_cycles(4);
  CHECK_THROWS_AS(johnson_enumerate(g, {Mode::temporal, {}, 0, false}, nullptr), ParameterError);
  CHECK_THROWS_AS(read_tarjan_enumerate(g, {Mode::hop, {}, 3, false}, {}, nullptr), ParameterError);
  CHECK_THROWS_AS(tiernan_enumerate(g, {Mode::hop, {}, 1, false}, nullptr), ParameterError);
  CHECK_THROWS_AS(tiernan_enumerate(g, {Mode::simple, -1, 0, false}, nullptr), ParameterError);
}
