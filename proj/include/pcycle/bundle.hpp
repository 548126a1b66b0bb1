#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pcycle/constraints.hpp"

namespace pcycle {

/// Non-owning bundle as produced during a search. hops[i] lists the
/// timestamps of the edge vertices[i] -> vertices[(i + 1) % size].
struct BundleView {
  std::span<const VertexId> vertices;
  std::span<const std::span<const Timestamp>> hops;
  Timestamp start_ts = 0;
};

struct CycleBundle {
  std::vector<VertexId> vertices;
  std::vector<std::vector<Timestamp>> hops;
  Timestamp start_ts = 0;

  static CycleBundle from_view(const BundleView& v);
  friend bool operator==(const CycleBundle&, const CycleBundle&) = default;
};

/// A single cycle: vertex sequence with one timestamp per hop.
struct CycleRecord {
  std::vector<VertexId> vertices;
  std::vector<Timestamp> ts;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
  friend auto operator<=>(const CycleRecord&, const CycleRecord&) = default;
};

/// Rotation that puts the minimum vertex id first.
CycleRecord canonical(CycleRecord c);

/// Nondecreasing temporal cycles whose timestamps are all equal have no
/// temporal start edge; they belong to the rotation that starts at the
/// smallest vertex. True when the bundle's rotation is not that one.
bool skips_constant_selection(const BundleView& b, Mode mode, bool nondecreasing);

/// Simple and hop modes: product of hop sizes. Temporal mode: number of
/// increasing selections (strict unless `nondecreasing`), one per hop.
std::uint64_t bundle_count(const BundleView& b, Mode mode, bool nondecreasing = false);
std::uint64_t bundle_count(const CycleBundle& b, Mode mode, bool nondecreasing = false);

/// Calls `out` once per cycle of the bundle, in lexicographic hop order.
template <class F>
void for_each_expanded(const BundleView& b, Mode mode, bool nondecreasing, F&& out);

std::vector<CycleRecord> bundle_expand(const CycleBundle& b, Mode mode, bool nondecreasing = false);

// ---------------------------------------------------------------------------

template <class F>
void for_each_expanded(const BundleView& b, Mode mode, bool nondecreasing, F&& out) {
  const std::size_t k = b.hops.size();
  if (k == 0) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Timestamp> pick(k);
  const bool temporal = mode == Mode::temporal;
  const bool skip_constant = skips_constant_selection(b, mode, nondecreasing);
  auto ok = [&](std::size_t i, Timestamp t) {
    if (!temporal || i == 0) return true;
    return nondecreasing ? t >= pick[i - 1] : t > pick[i - 1];
  };
  // Iterative depth-first walk over per-hop choices.
  std::size_t i = 0;
  idx[0] = 0;
  while (true) {
    if (idx[i] == b.hops[i].size()) {
      if (i == 0) return;
      --i;
      ++idx[i];
      continue;
    }
    const Timestamp t = b.hops[i][idx[i]];
    if (!ok(i, t)) {
      ++idx[i];
      continue;
    }
    pick[i] = t;
    if (i + 1 == k) {
      if (!(skip_constant && pick[k - 1] == pick[0])) out(std::span<const Timestamp>(pick));
      ++idx[i];
    } else {
      ++i;
      idx[i] = 0;
    }
  }
}

}  // namespace pcycle
