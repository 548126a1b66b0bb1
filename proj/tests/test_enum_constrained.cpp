#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "johnson_core.hpp"
#include "oracle.hpp"
#include "pcycle/enum_constrained.hpp"
#include "pcycle/generators.hpp"

using namespace pcycle;

namespace {

const std::vector<std::optional<Timestamp>> kWindows{std::nullopt, 2, 5};

}  // namespace

TEST_CASE("temporal enumerators match the oracle") {
  const auto graphs = corpus::random_graphs(60, 5);
  for (bool nd : {false, true}) {
    for (const auto& w : kWindows) {
      const Constraints c{Mode::temporal, w, 0, nd};
      for (const auto& g : graphs) {
        const auto want = oracle::cycles(g, c);
        for (Pruning p : {Pruning::none, Pruning::scc, Pruning::cycle_union}) {
          for (bool bundles : {true, false}) {
            SeqOptions o;
            o.prune = p;
            o.bundles = bundles;
            CollectingSink a(c.mode, nd), b(c.mode, nd), r(c.mode, nd), t(c.mode, nd);
            temporal_johnson_enumerate(g, c, &a, o);
            temporal_read_tarjan_enumerate(g, c, {}, &b, o);
            temporal_read_tarjan_enumerate(g, c, RtOptions::all_off(), &r, o);
            tiernan_enumerate(g, c, &t, o);
            CHECK(a.cycles() == want);
            CHECK(b.cycles() == want);
            CHECK(r.cycles() == want);
            CHECK(t.cycles() == want);
          }
        }
      }
    }
  }
}

TEST_CASE("hop-limited Johnson matches the oracle") {
  const auto graphs = corpus::random_graphs(60, 9);
  for (int L : {2, 3, 5, 8}) {
    for (const auto& w : kWindows) {
      const Constraints c{Mode::hop, w, L, false};
      for (const auto& g : graphs) {
        const auto want = oracle::cycles(g, c);
        for (bool bundles : {true, false}) {
          SeqOptions o;
          o.bundles = bundles;
          CollectingSink a(c.mode), t(c.mode);
          hop_johnson_enumerate(g, c, &a, o);
          tiernan_enumerate(g, c, &t, o);
          CHECK(a.cycles() == want);
          CHECK(t.cycles() == want);
        }
      }
    }
  }
}

TEST_CASE("hop limit 3 on exp-cycles(6) keeps cycles of two and three edges") {
  CountingSink s;
  hop_johnson_enumerate(exp_cycles(6), {Mode::hop, {}, 3, false}, &s);
  CHECK(s.cycles() == 5);
  CHECK(s.histogram() == std::map<std::size_t, std::uint64_t>{{2, 1}, {3, 4}});
}

TEST_CASE("temporal cycles respect order and window; hop cycles respect the limit") {
  for (const auto& g : corpus::random_graphs(30, 13)) {
    for (Timestamp delta : {3, 6}) {
      const Constraints c{Mode::temporal, delta, 0, false};
      CollectingSink s(c.mode);
      temporal_johnson_enumerate(g, c, &s);
      for (const auto& cyc : s.cycles()) {
        const std::size_t k = cyc.ts.size();
        const std::size_t s0 = std::min_element(cyc.ts.begin(), cyc.ts.end()) - cyc.ts.begin();
        for (std::size_t i = 1; i < k; ++i) CHECK(cyc.ts[(s0 + i) % k] > cyc.ts[(s0 + i - 1) % k]);
        CHECK(cyc.ts[(s0 + k - 1) % k] - cyc.ts[s0] <= delta);
      }
    }
    CollectingSink h(Mode::hop);
    hop_johnson_enumerate(g, {Mode::hop, {}, 4, false}, &h);
    for (const auto& cyc : h.cycles()) CHECK(cyc.vertices.size() <= 4);
  }
}

TEST_CASE("closing-time unblock re-opens in-edges transitively") {
  auto g = TemporalGraph::from_edges(4, {{0, 1, 0}, {1, 2, 3}, {1, 2, 7}, {3, 1, 5}, {2, 0, 9}});
  const Constraints c{Mode::temporal, {}, 0, false};
  SearchContext ctx(g, c, {0, 1, 0, 0});
  detail::TemporalCore s(4);
  s.begin(ctx);
  s.debug_set_ct(2, 4);
  s.debug_extend(2, 1, 7);  // 1 -> 2 blocked from timestamp 7 on
  s.debug_set_ct(1, 6);
  s.debug_extend(1, 3, 5);  // 3 -> 1 blocked from timestamp 5 on

  auto small = s;
  small.unblock(2, 5, ctx, nullptr);
  CHECK(small.closing_time(2) == 5);
  CHECK(small.closing_time(1) == 6);
  REQUIRE(small.ulist(2).size() == 1);

  s.unblock(2, 8, ctx, nullptr);
  CHECK(s.closing_time(2) == 8);
  CHECK(s.closing_time(1) == 7);
  CHECK(s.closing_time(3) == kTsMax);
  CHECK(s.ulist(2).empty());
  CHECK(s.ulist(1).empty());
  // Lowering is never done by unblock.
  s.unblock(2, 3, ctx, nullptr);
  CHECK(s.closing_time(2) == 8);
}

TEST_CASE("barrier unblock relaxes predecessors by reverse BFS") {
  auto g = TemporalGraph::from_edges(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {4, 3, 0}});
  const Constraints c{Mode::hop, {}, 4, false};
  SearchContext ctx(g, c, {0, 1, 0, 0});
  detail::HopCore s(5, 4);
  s.begin(ctx);
  for (VertexId v : {1, 2, 3, 4}) s.debug_set_barrier(v, 3);
  s.barrier_unblock(3, 0, ctx, nullptr);
  CHECK(s.barrier(3) == 0);
  CHECK(s.barrier(2) == 1);
  CHECK(s.barrier(4) == 1);
  CHECK(s.barrier(1) == 2);
  CHECK(s.barrier(0) == 4);  // the root is locked on the path
  // Barriers never go up.
  s.barrier_unblock(1, 3, ctx, nullptr);
  CHECK(s.barrier(1) == 2);
}

TEST_CASE("hop limit below two is rejected") {
  CHECK_THROWS_AS(hop_johnson_enumerate(exp_cycles(4), {Mode::hop, {}, 1, false}, nullptr), ParameterError);
  CHECK_THROWS_AS(temporal_johnson_enumerate(exp_cycles(4), {Mode::simple, {}, 0, false}, nullptr), ParameterError);
}
