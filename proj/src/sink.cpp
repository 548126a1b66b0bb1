#include "pcycle/sink.hpp"

#include <algorithm>

namespace pcycle {

void CountingSink::prepare(std::size_t shards) { shards_.assign(shards, Shard{}); }

void CountingSink::on_bundle(std::size_t shard, const BundleView& b, std::uint64_t count) {
  auto& s = shards_[shard];
  s.cycles += count;
  s.bundles += 1;
  const std::size_t len = b.vertices.size();
  if (s.by_length.size() <= len) s.by_length.resize(len + 1, 0);
  s.by_length[len] += count;
}

std::uint64_t CountingSink::cycles() const {
  std::uint64_t t = 0;
  for (const auto& s : shards_) t += s.cycles;
  return t;
}

std::uint64_t CountingSink::bundles() const {
  std::uint64_t t = 0;
  for (const auto& s : shards_) t += s.bundles;
  return t;
}

std::map<std::size_t, std::uint64_t> CountingSink::histogram() const {
  std::map<std::size_t, std::uint64_t> h;
  for (const auto& s : shards_) {
    for (std::size_t len = 0; len < s.by_length.size(); ++len) {
      if (s.by_length[len]) h[len] += s.by_length[len];
    }
  }
  return h;
}

void CollectingSink::prepare(std::size_t shards) { shards_.assign(shards, Shard{}); }

void CollectingSink::on_bundle(std::size_t shard, const BundleView& b, std::uint64_t) {
  auto& s = shards_[shard];
  s.bundles.push_back(CycleBundle::from_view(b));
  for_each_expanded(b, mode_, nondecreasing_, [&](std::span<const Timestamp> ts) {
    s.cycles.push_back(canonical({{b.vertices.begin(), b.vertices.end()}, {ts.begin(), ts.end()}}));
  });
}

std::vector<CycleRecord> CollectingSink::cycles() const {
  std::vector<CycleRecord> all;
  for (const auto& s : shards_) all.insert(all.end(), s.cycles.begin(), s.cycles.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<CycleBundle> CollectingSink::bundles() const {
  std::vector<CycleBundle> all;
  for (const auto& s : shards_) all.insert(all.end(), s.bundles.begin(), s.bundles.end());
  return all;
}

void Reporter::report(std::size_t shard, CounterShard& counters, const BundleView& b) const {
  const std::uint64_t count = bundle_count(b, c_.mode, c_.nondecreasing);
  if (count == 0) return;
  counters.cycles += count;
  if (bundles_) {
    counters.bundles += 1;
    if (sink_) sink_->on_bundle(shard, b, count);
    return;
  }
  counters.bundles += count;
  if (!sink_) return;
  std::vector<std::span<const Timestamp>> single(b.hops.size());
  for_each_expanded(b, c_.mode, c_.nondecreasing, [&](std::span<const Timestamp> ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) single[i] = ts.subspan(i, 1);
    sink_->on_bundle(shard, BundleView{b.vertices, single, b.start_ts}, 1);
  });
}

}  // namespace pcycle
