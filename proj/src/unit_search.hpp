#pragma once

// One sequential search rooted at a single start unit. The sequential
// enumerators and the coarse-grained driver both run these.

#include <memory>

#include "johnson_core.hpp"
#include "rt_core.hpp"

namespace pcycle::detail {

enum class Algo { tiernan, johnson, read_tarjan };

class UnitSearch {
 public:
  virtual ~UnitSearch() = default;
  virtual void run(const Env& env) = 0;
};

template <class Core>
class JohnsonUnit final : public UnitSearch {
 public:
  explicit JohnsonUnit(Core core) : core_(std::move(core)) {}
  void run(const Env& env) override {
    core_.begin(*env.ctx);
    explore(core_, core_.first_cand(*env.ctx), env);
    core_.end();
  }

 private:
  Core core_;
};

class RtUnit final : public UnitSearch {
 public:
  RtUnit(std::size_t n, const RtOptions& o) : core_(n, o) {}
  void run(const Env& env) override {
    core_.begin(*env.ctx);
    RtTask root;
    if (core_.start(env, root)) {
      stack_.push_back(std::move(root));
      while (!stack_.empty()) {
        RtTask t = std::move(stack_.back());
        stack_.pop_back();
        core_.run_task(std::move(t), env, [this](RtTask&& c) { stack_.push_back(std::move(c)); });
      }
    }
    core_.end();
  }

 private:
  RtCore core_;
  std::vector<RtTask> stack_;
};

/// Tiernan's exhaustive path search; walks edge groups, or single edges when
/// `per_edge` is set.
class TiernanUnit final : public UnitSearch {
 public:
  TiernanUnit(std::size_t n, bool per_edge) : onpath_(n, 0), per_edge_(per_edge) {}
  void run(const Env& env) override;

 private:
  void dfs(const Env& env, Timestamp arrival);
  void push(VertexId v, std::span<const Timestamp> hop);
  void pop();

  std::vector<std::uint8_t> onpath_;
  std::vector<VertexId> path_;
  std::vector<std::span<const Timestamp>> hop_in_, scratch_;
  bool per_edge_;
};

std::unique_ptr<UnitSearch> make_unit_search(Algo algo, std::size_t n, const Constraints& c,
                                             const RtOptions& rt, bool per_edge_tiernan);

/// Runs `search` over every start unit sequentially.
MetricsSnapshot run_sequential(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                               const SeqOptions& opts, UnitSearch& search);

}  // namespace pcycle::detail
