#include "pcycle/bundle.hpp"

#include <algorithm>

namespace pcycle {

CycleBundle CycleBundle::from_view(const BundleView& v) {
  CycleBundle b;
  b.vertices.assign(v.vertices.begin(), v.vertices.end());
  for (auto h : v.hops) b.hops.emplace_back(h.begin(), h.end());
  b.start_ts = v.start_ts;
  return b;
}

CycleRecord canonical(CycleRecord c) {
  if (c.vertices.empty()) return c;
  auto pos = std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin();
  std::rotate(c.vertices.begin(), c.vertices.begin() + pos, c.vertices.end());
  if (c.ts.size() == c.vertices.size()) std::rotate(c.ts.begin(), c.ts.begin() + pos, c.ts.end());
  return c;
}

bool skips_constant_selection(const BundleView& b, Mode mode, bool nondecreasing) {
  if (mode != Mode::temporal || !nondecreasing || b.vertices.empty()) return false;
  return *std::min_element(b.vertices.begin(), b.vertices.end()) != b.vertices.front();
}

std::uint64_t bundle_count(const BundleView& b, Mode mode, bool nondecreasing) {
  if (b.hops.empty()) return 0;
  if (mode != Mode::temporal) {
    std::uint64_t prod = 1;
    for (auto h : b.hops) prod *= h.size();
    return prod;
  }
  // ways[j]: number of valid selections for hops 0..i ending at hops[i][j].
  std::vector<std::uint64_t> ways(b.hops[0].size(), 1), next;
  for (std::size_t i = 1; i < b.hops.size(); ++i) {
    const auto prev = b.hops[i - 1];
    const auto cur = b.hops[i];
    next.assign(cur.size(), 0);
    std::uint64_t acc = 0;
    std::size_t p = 0;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      while (p < prev.size() && (nondecreasing ? prev[p] <= cur[j] : prev[p] < cur[j])) acc += ways[p++];
      next[j] = acc;
    }
    ways.swap(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  if (skips_constant_selection(b, mode, nondecreasing)) {
    // Duplicate timestamps multiply the number of constant selections.
    const auto first = b.hops[0];
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (i > 0 && first[i] == first[i - 1]) continue;
      std::uint64_t same = 1;
      for (auto h : b.hops) {
        auto [lo, hi] = std::equal_range(h.begin(), h.end(), first[i]);
        same *= static_cast<std::uint64_t>(hi - lo);
      }
      total -= same;
    }
  }
  return total;
}

namespace {

struct ViewHolder {
  std::vector<std::span<const Timestamp>> spans;
  BundleView view;
  explicit ViewHolder(const CycleBundle& b) {
    for (const auto& h : b.hops) spans.emplace_back(h);
    view = {b.vertices, spans, b.start_ts};
  }
};

}  // namespace

std::uint64_t bundle_count(const CycleBundle& b, Mode mode, bool nondecreasing) {
  ViewHolder h(b);
  return bundle_count(h.view, mode, nondecreasing);
}

std::vector<CycleRecord> bundle_expand(const CycleBundle& b, Mode mode, bool nondecreasing) {
  ViewHolder h(b);
  std::vector<CycleRecord> out;
  for_each_expanded(h.view, mode, nondecreasing, [&](std::span<const Timestamp> ts) {
    out.push_back({b.vertices, {ts.begin(), ts.end()}});
  });
  return out;
}

}  // namespace pcycle
