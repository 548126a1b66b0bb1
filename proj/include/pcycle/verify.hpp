#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcycle/engine.hpp"

namespace pcycle {

/// One configuration checked against the reference enumerator.
struct VerifyCase {
  Constraints constraints;
  EngineConfig config;
  std::string label;
};

struct MatrixOptions {
  std::vector<Mode> modes{Mode::simple, Mode::temporal, Mode::hop};
  std::vector<std::optional<Timestamp>> windows{std::nullopt, 2, 5};
  std::vector<int> hop_limits{3, 5, 8};
  std::vector<int> fine_threads{2, 4, 8};
  bool all_rt_switches = true;  // all eight read-tarjan switch combinations
  bool both_bundle_settings = false;
  std::uint64_t seed = 0;
};

/// Johnson and Read-Tarjan in every execution strategy for each constraint
/// combination of `opts`.
std::vector<VerifyCase> verify_matrix(const MatrixOptions& opts);

std::string describe(const Constraints& c, const EngineConfig& cfg);

/// Sorted canonical cycles reported by `cfg`.
std::vector<CycleRecord> collect_cycles(const TemporalGraph& g, const Constraints& c, const EngineConfig& cfg);

/// Cycles from the reference enumerator (Tiernan over single edges).
std::vector<CycleRecord> reference_cycles(const TemporalGraph& g, const Constraints& c);

struct Mismatch {
  VerifyCase which;
  TemporalGraph graph;
  std::vector<CycleRecord> expected, actual;
};

/// First case whose result differs from the reference, if any.
std::optional<Mismatch> verify_graph(const TemporalGraph& g, const std::vector<VerifyCase>& cases);

/// Drops edges one at a time while the mismatch persists.
Mismatch shrink(const Mismatch& m);

}  // namespace pcycle
