#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "pcycle/coarse.hpp"
#include "pcycle/generators.hpp"

using namespace pcycle;

namespace {

struct AlgoCase {
  CoarseAlgo algo;
  Constraints c;
};

const std::vector<AlgoCase> kCases{
    {CoarseAlgo::tiernan, {}},
    {CoarseAlgo::johnson, {}},
    {CoarseAlgo::johnson, {Mode::simple, 2, 0, false}},
    {CoarseAlgo::read_tarjan, {}},
    {CoarseAlgo::read_tarjan, {Mode::temporal, 5, 0, false}},
    {CoarseAlgo::temporal_johnson, {Mode::temporal, {}, 0, false}},
    {CoarseAlgo::temporal_johnson, {Mode::temporal, 2, 0, true}},
    {CoarseAlgo::hop_johnson, {Mode::hop, {}, 3, false}},
    {CoarseAlgo::hop_johnson, {Mode::hop, 5, 8, false}},
};

}  // namespace

TEST_CASE("coarse results match the oracle for both grains") {
  for (const auto& g : corpus::random_graphs(40, 61)) {
    for (const auto& k : kCases) {
      const auto want = oracle::cycles(g, k.c);
      for (Grain grain : {Grain::vertex, Grain::edge}) {
        for (int p : {1, 4}) {
          CoarseOptions o;
          o.threads = p;
          o.grain = grain;
          CollectingSink s(k.c.mode, k.c.nondecreasing);
          coarse_enumerate(g, k.c, k.algo, &s, o);
          CHECK(s.cycles() == want);
        }
      }
    }
  }
}

TEST_CASE("edge visits do not depend on the worker count") {
  for (const auto& g : corpus::random_graphs(20, 67)) {
    for (const auto& k : kCases) {
      std::optional<VisitCounters> first;
      for (int p : {1, 2, 8}) {
        CoarseOptions o;
        o.threads = p;
        CountingSink s;
        const auto m = coarse_enumerate(g, k.c, k.algo, &s, o);
        if (!first) first = m.visits;
        CHECK(m.visits == *first);
      }
    }
  }
}

TEST_CASE("exp-cycles counts") {
  for (CoarseAlgo a : {CoarseAlgo::tiernan, CoarseAlgo::johnson, CoarseAlgo::read_tarjan}) {
    CoarseOptions o;
    o.threads = 4;
    CountingSink s;
    coarse_enumerate(exp_cycles(10), {}, a, &s, o);
    CHECK(s.cycles() == 256);
  }
}

TEST_CASE("a single start vertex leaves the other workers idle") {
  CoarseOptions o;
  o.threads = 4;
  CountingSink s;
  const auto m = coarse_enumerate(exp_cycles(16), {}, CoarseAlgo::johnson, &s, o);
  CHECK(s.cycles() == 16384);
  REQUIRE(m.busy_ns.size() == 4);
  CHECK(busy_time_cv(m) > 1.0);
}

TEST_CASE("mode and algorithm must agree") {
  CountingSink s;
  CHECK_THROWS_AS(coarse_enumerate(exp_cycles(4), {}, CoarseAlgo::temporal_johnson, &s), ParameterError);
  CHECK_THROWS_AS(coarse_enumerate(exp_cycles(4), {Mode::hop, {}, 3, false}, CoarseAlgo::read_tarjan, &s),
                  ParameterError);
  CHECK_THROWS_AS(coarse_enumerate(exp_cycles(4), {Mode::temporal, {}, 0, false}, CoarseAlgo::hop_johnson, &s),
                  ParameterError);
}
