#pragma once

// Per-mode search state for the Johnson family. Every vertex visit is split
// into enter / scan / absorb / leave so that the sequential recursion and the
// task-parallel version execute the same steps in the same order.

#include <algorithm>
#include <climits>
#include <deque>
#include <span>
#include <vector>

#include "search_env.hpp"

namespace pcycle::detail {

enum class CosVariant { recursive, complete };

inline const AdjGroup* find_group(std::span<const AdjGroup> groups, VertexId nb) {
  auto it = std::lower_bound(groups.begin(), groups.end(), nb,
                             [](const AdjGroup& g, VertexId v) { return g.neighbor < v; });
  return (it != groups.end() && it->neighbor == nb) ? &*it : nullptr;
}

// ---------------------------------------------------------------------------
// Simple cycles: blocked set plus unblock lists.

class SimpleCore {
 public:
  struct Cand {
    VertexId v;
    std::span<const Timestamp> hop;
  };
  using Result = bool;
  struct Acc {
    bool found = false;
  };

  explicit SimpleCore(std::size_t n) : blocked_(n, 0), onpath_(n, 0), tag_(n, 0), blist_(n), touched_(n) {}

  static Result blocked_result() { return false; }
  static Result stolen_result() { return true; }

  void begin(const SearchContext& ctx) {
    push(ctx.root(), {});
  }
  Cand first_cand(const SearchContext& ctx) const { return {ctx.first(), ctx.first_hop()}; }
  bool should_spawn(const Cand&) const { return true; }

  bool enter(const Cand& c, const Env& env) {
    if (blocked_[c.v] || onpath_[c.v]) return false;
    push(c.v, c.hop);
    PCYCLE_COUNT(++env.counters->visits.vertex_visits);
    env.trace_event(TraceEvent::enter, c.v);
    return true;
  }

  void scan(Acc& acc, std::vector<Cand>& out, const Env& env) {
    const auto& ctx = *env.ctx;
    const auto& g = ctx.graph();
    const VertexId v = path_.back();
    for (const auto& grp : g.out_groups(v)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w)) continue;
      auto ts = ctx.admissible(v, g.out_ts(grp));
      if (ts.empty()) continue;
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      if (w == ctx.root()) {
        report_path(env, path_, hop_in_, ts, scratch_);
        acc.found = true;
      } else if (!blocked_[w] && !onpath_[w]) {
        out.push_back({w, ts});
      }
    }
  }

  void absorb(Acc& acc, const Cand&, Result r, const Env&) { acc.found = acc.found || r; }

  Result leave(const Acc& acc, const Env& env) {
    const VertexId v = path_.back();
    pop();
    env.trace_event(TraceEvent::leave, v);
    if (acc.found) {
      unblock(v, env.counters);
    } else {
      const auto& ctx = *env.ctx;
      const auto& g = ctx.graph();
      for (const auto& grp : g.out_groups(v)) {
        const VertexId w = grp.neighbor;
        if (w == ctx.root() || !ctx.enterable(w) || ctx.admissible(v, g.out_ts(grp)).empty()) continue;
        auto& bl = blist_[w];
        if (std::find(bl.begin(), bl.end(), v) == bl.end()) {
          bl.push_back(v);
          touch(w);
        }
      }
    }
    return acc.found;
  }

  /// Removes v from the blocked set and cascades through the unblock lists.
  void unblock(VertexId v, CounterShard* cs) {
    if (!blocked_[v] || onpath_[v]) return;
    blocked_[v] = 0;
    stack_.assign(1, v);
    while (!stack_.empty()) {
      VertexId x = stack_.back();
      stack_.pop_back();
      if (cs) PCYCLE_COUNT(++cs->visits.unblock_calls);
      for (VertexId w : blist_[x]) {
        if (blocked_[w] && !onpath_[w]) {
          blocked_[w] = 0;
          stack_.push_back(w);
        }
      }
      blist_[x].clear();
    }
  }

  /// Adjusts a verbatim copy of the victim's state for a stolen task of depth d.
  void copy_on_steal(std::size_t d, CosVariant variant, CounterShard* cs) {
    if (variant == CosVariant::recursive) {
      while (path_.size() >= d) {
        const VertexId u = path_.back();
        pop();
        unblock(u, cs);
      }
      return;
    }
    while (path_.size() >= d) pop();
    for (VertexId v : touched_) {
      if (blocked_[v] && tag_[v] >= d) blocked_[v] = 0;
    }
  }

  void end() {
    for (VertexId v : touched_) {
      blocked_[v] = 0;
      onpath_[v] = 0;
      tag_[v] = 0;
      blist_[v].clear();
    }
    touched_.clear();
    path_.clear();
    hop_in_.clear();
  }

  std::size_t depth() const { return path_.size(); }
  const std::vector<VertexId>& path() const { return path_; }
  bool is_blocked(VertexId v) const { return blocked_[v] != 0; }
  const std::vector<VertexId>& blist(VertexId v) const { return blist_[v]; }
  // Test access: seeds blocked vertices and unblock lists directly.
  void debug_block(VertexId v, std::size_t tag) {
    blocked_[v] = 1;
    tag_[v] = static_cast<std::uint32_t>(tag);
    touch(v);
  }
  void debug_push(VertexId v) { push(v, {}); }
  void debug_blist_add(VertexId w, VertexId v) {
    blist_[w].push_back(v);
    touch(w);
  }

 private:
  void touch(VertexId v) { touched_.add(v); }
  void push(VertexId v, std::span<const Timestamp> hop) {
    path_.push_back(v);
    hop_in_.push_back(hop);
    onpath_[v] = 1;
    blocked_[v] = 1;
    tag_[v] = static_cast<std::uint32_t>(path_.size());
    touch(v);
  }
  void pop() {
    onpath_[path_.back()] = 0;
    path_.pop_back();
    hop_in_.pop_back();
  }

  std::vector<std::uint8_t> blocked_, onpath_;
  std::vector<std::uint32_t> tag_;
  std::vector<std::vector<VertexId>> blist_;
  std::vector<VertexId> path_, stack_;
  TouchedSet touched_;
  std::vector<std::span<const Timestamp>> hop_in_, scratch_;
};

// ---------------------------------------------------------------------------
// Temporal cycles: closing times. ct[w] rejects arrivals at w with a
// timestamp >= ct[w]; ulist[w] remembers (v, t): the edge v->w is blocked
// from timestamp t on.

class TemporalCore {
 public:
  struct Cand {
    VertexId v;
    Timestamp arrival;
    std::size_t pos;                  // index of `arrival` inside hop
    std::span<const Timestamp> hop;   // all admissible timestamps of the edge
    bool pre_blocked;
  };
  /// Closing value returned to the parent; kTsMin means "no cycle found".
  using Result = Timestamp;
  struct Acc {
    Timestamp lastp = kTsMin;
  };

  explicit TemporalCore(std::size_t n) : ct_(n, kTsMax), onpath_(n, 0), ulist_(n), touched_(n) {}

  static Result blocked_result() { return kTsMin; }
  static Result stolen_result() { return kTsMax; }

  void begin(const SearchContext& ctx) { push(ctx.root(), kTsMin, {}); }
  Cand first_cand(const SearchContext& ctx) const { return {ctx.first(), ctx.t0(), 0, ctx.first_hop(), false}; }
  bool should_spawn(const Cand& c) const { return !c.pre_blocked; }

  bool enter(const Cand& c, const Env& env) {
    if (onpath_[c.v] || c.arrival >= ct_[c.v]) return false;
    push(c.v, c.arrival, c.hop);
    PCYCLE_COUNT(++env.counters->visits.vertex_visits);
    env.trace_event(TraceEvent::enter, c.v);
    return true;
  }

  void scan(Acc& acc, std::vector<Cand>& out, const Env& env) {
    const auto& ctx = *env.ctx;
    const auto& g = ctx.graph();
    const VertexId v = path_.back();
    const Timestamp a = arrival_.back();
    for (const auto& grp : g.out_groups(v)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w)) continue;
      auto ts = ctx.admissible(v, g.out_ts(grp));
      const std::size_t i = ctx.first_following(ts, a);
      if (i == ts.size()) continue;
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      if (w == ctx.root()) {
        report_path(env, path_, hop_in_, ts, scratch_);
        acc.lastp = std::max(acc.lastp, ts.back());
      } else {
        out.push_back({w, ts[i], i, ts, onpath_[w] || ts[i] >= ct_[w]});
      }
    }
  }

  void absorb(Acc& acc, const Cand& c, Result r, const Env&) {
    const Timestamp eff = std::max(r, onpath_[c.v] ? kTsMin : ct_[c.v]);
    auto rest = c.hop.subspan(c.pos);
    auto cut = std::lower_bound(rest.begin(), rest.end(), eff);
    if (cut != rest.begin()) acc.lastp = std::max(acc.lastp, *(cut - 1));
    if (cut != rest.end()) extend(c.v, path_.back(), *cut);
  }

  Result leave(const Acc& acc, const Env& env) {
    const VertexId v = path_.back();
    pop();
    env.trace_event(TraceEvent::leave, v);
    if (acc.lastp == kTsMin) return kTsMin;
    const Timestamp c = env.ctx->closing_from_departure(acc.lastp);
    unblock(v, c, *env.ctx, env.counters);
    return c;
  }

  /// Raises ct[v] to `c` and re-opens the in-edges that become useful.
  void unblock(VertexId v, Timestamp c, const SearchContext& ctx, CounterShard* cs) {
    const auto& g = ctx.graph();
    work_.assign(1, {v, c});
    while (!work_.empty()) {
      auto [x, cx] = work_.back();
      work_.pop_back();
      if (onpath_[x] || cx <= ct_[x]) continue;
      touch(x);
      ct_[x] = cx;
      if (cs) PCYCLE_COUNT(++cs->visits.unblock_calls);
      auto& ul = ulist_[x];
      for (std::size_t k = 0; k < ul.size();) {
        auto [w, tb] = ul[k];
        if (tb >= cx || onpath_[w]) {
          ++k;
          continue;
        }
        const AdjGroup* grp = find_group(g.in_groups(x), w);
        auto ts = grp ? ctx.admissible(w, g.in_ts(*grp)) : std::span<const Timestamp>{};
        auto cut = std::lower_bound(ts.begin(), ts.end(), cx);
        if (cut != ts.end()) {
          ul[k].second = *cut;
          ++k;
        } else {
          ul[k] = ul.back();
          ul.pop_back();
        }
        if (cut != ts.begin()) work_.push_back({w, ctx.closing_from_departure(*(cut - 1))});
      }
    }
  }

  void copy_on_steal(std::size_t d, const SearchContext& ctx, CounterShard* cs) {
    while (path_.size() >= d) {
      const VertexId u = path_.back();
      const Timestamp prev = prevlock_.back();
      pop();
      unblock(u, prev, ctx, cs);
    }
  }

  void end() {
    for (VertexId v : touched_) {
      ct_[v] = kTsMax;
      onpath_[v] = 0;
      ulist_[v].clear();
    }
    touched_.clear();
    path_.clear();
    arrival_.clear();
    prevlock_.clear();
    hop_in_.clear();
  }

  std::size_t depth() const { return path_.size(); }
  const std::vector<VertexId>& path() const { return path_; }
  Timestamp closing_time(VertexId v) const { return ct_[v]; }
  void debug_set_ct(VertexId v, Timestamp t) {
    ct_[v] = t;
    touch(v);
  }
  void debug_extend(VertexId w, VertexId v, Timestamp t) { extend(w, v, t); }
  const std::vector<std::pair<VertexId, Timestamp>>& ulist(VertexId w) const { return ulist_[w]; }

 private:
  void touch(VertexId v) { touched_.add(v); }
  void extend(VertexId w, VertexId v, Timestamp t) {
    auto& ul = ulist_[w];
    for (auto& e : ul) {
      if (e.first == v) {
        e.second = std::min(e.second, t);
        return;
      }
    }
    ul.push_back({v, t});
    touch(w);
  }
  void push(VertexId v, Timestamp a, std::span<const Timestamp> hop) {
    path_.push_back(v);
    arrival_.push_back(a);
    prevlock_.push_back(ct_[v]);
    hop_in_.push_back(hop);
    onpath_[v] = 1;
    if (a != kTsMin) ct_[v] = a;
    touch(v);
  }
  void pop() {
    onpath_[path_.back()] = 0;
    path_.pop_back();
    arrival_.pop_back();
    prevlock_.pop_back();
    hop_in_.pop_back();
  }

  std::vector<Timestamp> ct_;
  std::vector<std::uint8_t> onpath_;
  std::vector<std::vector<std::pair<VertexId, Timestamp>>> ulist_;
  std::vector<VertexId> path_;
  TouchedSet touched_;
  std::vector<Timestamp> arrival_, prevlock_;
  std::vector<std::pair<VertexId, Timestamp>> work_;
  std::vector<std::span<const Timestamp>> hop_in_, scratch_;
};

// ---------------------------------------------------------------------------
// Hop-constrained cycles: barriers. v is blocked for a path of k vertices
// when k >= L - bar[v].

class HopCore {
 public:
  struct Cand {
    VertexId v;
    std::span<const Timestamp> hop;
  };
  /// Hops from the vertex back to the root along a found cycle; kNone if none.
  using Result = int;
  static constexpr int kNone = INT_MAX;
  struct Acc {
    int hops = kNone;
  };

  HopCore(std::size_t n, int L) : L_(L), bar_(n, 0), onpath_(n, 0), touched_(n) {}

  static Result blocked_result() { return kNone; }
  static Result stolen_result() { return 0; }

  void begin(const SearchContext& ctx) { push(ctx.root(), {}); }
  Cand first_cand(const SearchContext& ctx) const { return {ctx.first(), ctx.first_hop()}; }
  bool should_spawn(const Cand&) const { return true; }

  bool blocked(VertexId v) const {
    return onpath_[v] || static_cast<long>(path_.size()) >= static_cast<long>(L_) - bar_[v];
  }

  bool enter(const Cand& c, const Env& env) {
    if (blocked(c.v)) return false;
    push(c.v, c.hop);
    PCYCLE_COUNT(++env.counters->visits.vertex_visits);
    env.trace_event(TraceEvent::enter, c.v);
    return true;
  }

  void scan(Acc& acc, std::vector<Cand>& out, const Env& env) {
    const auto& ctx = *env.ctx;
    const auto& g = ctx.graph();
    const VertexId v = path_.back();
    for (const auto& grp : g.out_groups(v)) {
      const VertexId w = grp.neighbor;
      if (!ctx.enterable(w)) continue;
      auto ts = ctx.admissible(v, g.out_ts(grp));
      if (ts.empty()) continue;
      PCYCLE_COUNT(++env.counters->visits.edge_visits);
      if (w == ctx.root()) {
        report_path(env, path_, hop_in_, ts, scratch_);
        acc.hops = 1;
      } else if (!blocked(w)) {
        out.push_back({w, ts});
      }
    }
  }

  void absorb(Acc& acc, const Cand&, Result r, const Env&) {
    if (r != kNone) acc.hops = std::min(acc.hops, r + 1);
  }

  Result leave(const Acc& acc, const Env& env) {
    const VertexId v = path_.back();
    const int k = static_cast<int>(path_.size());
    pop();
    env.trace_event(TraceEvent::leave, v);
    if (acc.hops == kNone) {
      bar_[v] = L_ - k + 1;
      return kNone;
    }
    barrier_unblock(v, acc.hops - 1, *env.ctx, env.counters);
    return acc.hops;
  }

  /// Lowers bar[v] and relaxes every vertex that reaches v, by reverse BFS.
  void barrier_unblock(VertexId v, int nb, const SearchContext& ctx, CounterShard* cs) {
    if (nb >= bar_[v]) return;
    const auto& g = ctx.graph();
    bar_[v] = nb;
    touch(v);
    queue_.clear();
    queue_.push_back(v);
    while (!queue_.empty()) {
      VertexId x = queue_.front();
      queue_.pop_front();
      if (cs) PCYCLE_COUNT(++cs->visits.unblock_calls);
      for (const auto& grp : g.in_groups(x)) {
        const VertexId u = grp.neighbor;
        if (u == ctx.root() || onpath_[u] || !ctx.enterable(u)) continue;
        if (ctx.admissible(u, g.in_ts(grp)).empty()) continue;
        if (bar_[u] > bar_[x] + 1) {
          bar_[u] = bar_[x] + 1;
          touch(u);
          queue_.push_back(u);
        }
      }
    }
  }

  void copy_on_steal(std::size_t d, const SearchContext& ctx, CounterShard* cs) {
    while (path_.size() >= d) {
      const VertexId u = path_.back();
      const int prev = prevlock_.back();
      pop();
      barrier_unblock(u, prev, ctx, cs);
    }
  }

  void end() {
    for (VertexId v : touched_) {
      bar_[v] = 0;
      onpath_[v] = 0;
    }
    touched_.clear();
    path_.clear();
    prevlock_.clear();
    hop_in_.clear();
  }

  std::size_t depth() const { return path_.size(); }
  const std::vector<VertexId>& path() const { return path_; }
  int barrier(VertexId v) const { return bar_[v]; }
  void debug_set_barrier(VertexId v, int b) {
    bar_[v] = b;
    touch(v);
  }

 private:
  void touch(VertexId v) { touched_.add(v); }
  void push(VertexId v, std::span<const Timestamp> hop) {
    path_.push_back(v);
    prevlock_.push_back(bar_[v]);
    hop_in_.push_back(hop);
    onpath_[v] = 1;
    bar_[v] = L_;
    touch(v);
  }
  void pop() {
    onpath_[path_.back()] = 0;
    path_.pop_back();
    prevlock_.pop_back();
    hop_in_.pop_back();
  }

  int L_;
  std::vector<int> bar_;
  std::vector<std::uint8_t> onpath_;
  std::vector<VertexId> path_;
  TouchedSet touched_;
  std::vector<int> prevlock_;
  std::deque<VertexId> queue_;
  std::vector<std::span<const Timestamp>> hop_in_, scratch_;
};

/// Sequential recursion shared by all Johnson-family cores.
template <class Core>
typename Core::Result explore(Core& st, const typename Core::Cand& c, const Env& env) {
  if (!st.enter(c, env)) return Core::blocked_result();
  typename Core::Acc acc;
  std::vector<typename Core::Cand> cands;
  st.scan(acc, cands, env);
  std::vector<typename Core::Result> res(cands.size(), Core::blocked_result());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (st.should_spawn(cands[i])) res[i] = explore(st, cands[i], env);
  }
  for (std::size_t i = 0; i < cands.size(); ++i) st.absorb(acc, cands[i], res[i], env);
  return st.leave(acc, env);
}

}  // namespace pcycle::detail
