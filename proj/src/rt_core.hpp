#pragma once

// Read-Tarjan search state. Blocking is stored as a per-vertex arrival
// threshold: w is blocked for an arrival t when t >= blk[w]. Simple mode uses
// the constant arrival kTsMin, so "blocked" becomes blk[w] == kTsMin. Every
// block is tagged with the depth of the task that made it and logged, so a
// task can drop the blocks of the tasks that ran before it.

#include <algorithm>
#include <vector>

#include "pcycle/enum_seq.hpp"
#include "search_env.hpp"

namespace pcycle::detail {

struct RtStep {
  VertexId v;
  Timestamp arrival;
  std::span<const Timestamp> hop;  // admissible timestamps of the edge into v
};

struct RtTask {
  std::uint32_t junction = 1;  // path length to keep
  std::uint32_t depth = 1;
  bool needs_extension = false;  // only the first step is known
  std::vector<RtStep> ext;       // ends with a step onto the root
};

class RtCore {
 public:
  RtCore(std::size_t n, const RtOptions& o) : opt_(o), blk_(n, kTsMax), vis_(n, kTsMax), onpath_(n, 0), touched_(n) {}

  void begin(const SearchContext& ctx) { push({ctx.root(), kTsMin, {}}); }

  /// Initial extension search from the start unit's first vertex.
  bool start(const Env& env, RtTask& out) {
    const auto& ctx = *env.ctx;
    out = RtTask{1, 1, false, {}};
    return extend_from({ctx.first(), ctx.temporal() ? ctx.t0() : kTsMin, ctx.first_hop()}, 0, env, out.ext);
  }

  template <class Spawn>
  void run_task(RtTask&& task, const Env& env, Spawn&& spawn) {
    const auto& ctx = *env.ctx;
    const auto& g = ctx.graph();
    truncate(task.junction, opt_.fwd_blk ? task.depth : 0);
    std::vector<RtStep> ext = std::move(task.ext);
    if (task.needs_extension) {
      const RtStep s = ext.front();
      if (!extend_from(s, task.depth, env, ext)) return;
    }
    std::size_t pos = 0;
    bool found = false;
    while (ext[pos].v != ctx.root()) {
      const RtStep s = ext[pos++];
      push(s);
      PCYCLE_COUNT(++env.counters->visits.vertex_visits);
      env.trace_event(TraceEvent::enter, s.v);
      const VertexId next = ext[pos].v;
      for (const auto& grp : g.out_groups(s.v)) {
        const VertexId u = grp.neighbor;
        if (!ctx.enterable(u)) continue;
        auto ts = ctx.admissible(s.v, g.out_ts(grp));
        const std::size_t i = ctx.temporal() ? ctx.first_following(ts, s.arrival) : 0;
        if (i >= ts.size()) continue;
        PCYCLE_COUNT(++env.counters->visits.edge_visits);
        if (u == next) continue;
        const Timestamp t = ctx.temporal() ? ts[i] : kTsMin;
        RtTask child{static_cast<std::uint32_t>(path_.size()), task.depth + 1, false, {}};
        if (u == ctx.root()) {
          child.ext.push_back({u, t, ts});
        } else if (onpath_[u] || t >= blk_[u]) {
          continue;
        } else if (!extend_from({u, t, ts}, task.depth, env, child.ext)) {
          continue;
        } else if (!opt_.fwd_ext) {
          child.ext.resize(1);
          child.needs_extension = true;
        }
        spawn(std::move(child));
        found = true;
      }
      if (found) break;
    }
    if (ext[pos].v == ctx.root()) {
      report_path(env, path_, hop_in_, ext[pos].hop, scratch_);
      return;
    }
    RtTask cont{static_cast<std::uint32_t>(path_.size()), task.depth + 1, false, {}};
    cont.ext.assign(ext.begin() + static_cast<std::ptrdiff_t>(pos), ext.end());
    if (!opt_.fwd_ext) {
      cont.ext.resize(1);
      cont.needs_extension = true;
    }
    spawn(std::move(cont));
  }

  void end() {
    for (VertexId v : touched_) {
      blk_[v] = kTsMax;
      onpath_[v] = 0;
    }
    touched_.clear();
    log_.clear();
    path_.clear();
    arrival_.clear();
    hop_in_.clear();
  }

  const std::vector<VertexId>& path() const { return path_; }
  bool blocked(VertexId v, Timestamp arrival) const { return onpath_[v] || arrival >= blk_[v]; }
  Timestamp block_threshold(VertexId v) const { return blk_[v]; }
  /// Number of blocks with a depth tag of at least d.
  std::size_t blocks_at_or_above(std::uint32_t d) const {
    return static_cast<std::size_t>(std::count_if(log_.begin(), log_.end(), [d](const LogEntry& e) { return e.depth >= d; }));
  }

  /// Extension search from s: fills `ext` (s first, root step last) or, on
  /// failure, blocks every visited vertex at its visit arrival.
  bool extend_from(const RtStep& s, std::uint32_t tag, const Env& env, std::vector<RtStep>& ext) {
    ext.clear();
    const bool ok = dfs(s, tag, env, ext);
    if (ok) {
      std::reverse(ext.begin(), ext.end());
    }
    for (VertexId x : vis_list_) {
      if (!ok) block(x, vis_[x], tag);
      vis_[x] = kTsMax;
    }
    vis_list_.clear();
    return ok;
  }

 private:
  struct LogEntry {
    VertexId v;
    Timestamp old;
    std::uint32_t depth;
  };

  bool dfs(const RtStep& s, std::uint32_t tag, const Env& env, std::vector<RtStep>& ext) {
    const auto& ctx = *env.ctx;
    const auto& g = ctx.graph();
    PCYCLE_COUNT(++env.counters->visits.dfs_calls);
    env.trace_event(TraceEvent::dfs, s.v);
    if (vis_[s.v] == kTsMax) vis_list_.push_back(s.v);
    vis_[s.v] = std::min(vis_[s.v], s.arrival);
    bool all_blocked = true;
    for (const auto& grp : g.out_groups(s.v)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w)) continue;
      auto ts = ctx.admissible(s.v, g.out_ts(grp));
      const std::size_t i = ctx.temporal() ? ctx.first_following(ts, s.arrival) : 0;
      if (i >= ts.size()) continue;
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      const Timestamp t = ctx.temporal() ? ts[i] : kTsMin;
      if (w == ctx.root()) {
        ext.push_back({w, t, ts});
        ext.push_back(s);
        return true;
      }
      if (onpath_[w] || t >= blk_[w]) continue;
      if (t < vis_[w] && dfs({w, t, ts}, tag, env, ext)) {
        ext.push_back(s);
        return true;
      }
      if (t < blk_[w]) all_blocked = false;
    }
    if (opt_.blk_on_success && all_blocked) block(s.v, s.arrival, tag);
    return false;
  }

  void block(VertexId v, Timestamp arrival, std::uint32_t tag) {
    if (arrival >= blk_[v]) return;
    log_.push_back({v, blk_[v], tag});
    blk_[v] = arrival;
    touched_.add(v);
  }

  void truncate(std::uint32_t junction, std::uint32_t depth_cut) {
    while (path_.size() > junction) {
      onpath_[path_.back()] = 0;
      path_.pop_back();
      arrival_.pop_back();
      hop_in_.pop_back();
    }
    while (!log_.empty() && log_.back().depth >= depth_cut) {
      blk_[log_.back().v] = log_.back().old;
      log_.pop_back();
    }
  }

  void push(const RtStep& s) {
    path_.push_back(s.v);
    arrival_.push_back(s.arrival);
    hop_in_.push_back(s.hop);
    onpath_[s.v] = 1;
    touched_.add(s.v);
  }

  RtOptions opt_;
  std::vector<Timestamp> blk_, vis_;
  std::vector<std::uint8_t> onpath_;
  std::vector<LogEntry> log_;
  std::vector<VertexId> path_, vis_list_;
  TouchedSet touched_;
  std::vector<Timestamp> arrival_;
  std::vector<std::span<const Timestamp>> hop_in_, scratch_;
};

}  // namespace pcycle::detail
