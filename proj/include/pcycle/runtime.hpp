#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pcycle {

/// Identity of a running task. Worker identities below `workers()` are real
/// threads; larger ones are virtual thieves created by the steal injector.
struct TaskContext {
  std::uint64_t id = 0;  // spawn sequence number, starting at 1
  int depth = 0;         // spawn-tree depth; tasks spawned by the run root have depth 1
  int creator = 0;
  int executor = 0;
  bool stolen() const { return creator != executor; }
};

/// Makes one task run as if a thief had taken it: the task is removed from
/// its creator's queue after `delay` scheduling points of the creator, or
/// when the creator would pop it, whichever comes first. A scheduling point
/// is a task start or either end of a wait. Single-worker schedulers only.
struct StealInjection {
  std::uint64_t task_id = 0;
  std::uint64_t delay = 0;
};

struct SchedulerOptions {
  int workers = 1;
  std::uint64_t seed = 0;
  /// Random short pauses at scheduling points to vary steal interleavings.
  bool perturb = false;
  std::optional<StealInjection> inject;
};

struct RuntimeStats {
  std::uint64_t spawned = 0;
  std::uint64_t stolen = 0;
  std::uint64_t completed = 0;
  bool injected = false;
  std::vector<std::uint64_t> busy_ns;
};

class Scheduler;

/// Join counter for the tasks spawned by one parent.
class TaskGroup {
 public:
  TaskGroup();
  ~TaskGroup();
  TaskGroup(const TaskGroup&) = delete;
  TaskGroup& operator=(const TaskGroup&) = delete;

  /// Queues a task on the calling worker. A `steal_only` task is never run by
  /// its creator while other workers exist. Returns the task id.
  std::uint64_t spawn(std::function<void(const TaskContext&)> fn, bool steal_only = false);
  /// Returns once every task spawned through this group has finished; the
  /// caller runs queued tasks in the meantime.
  void wait();

 private:
  friend class Scheduler;
  Scheduler* sched_;
  int worker_;
  std::uint64_t fence_;
  std::atomic<std::int64_t> pending_{0};
};

class Scheduler {
 public:
  explicit Scheduler(SchedulerOptions opts = {});
  ~Scheduler();
  Scheduler(const Scheduler&) = delete;
  Scheduler& operator=(const Scheduler&) = delete;

  int workers() const { return opts_.workers; }

  /// Runs `root` on the calling thread as worker 0 until it returns; other
  /// workers help with the tasks it spawns. Exceptions from tasks propagate.
  void run(const std::function<void()>& root);

  /// Calls body(i) for every i < n as dynamically balanced tasks. Must be
  /// called from inside run().
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

  RuntimeStats stats() const;

  /// Real worker index of the calling thread, or -1 outside any scheduler.
  static int current_worker();
  /// Identity the current task runs under (virtual thieves included).
  static int current_identity();
  static int current_depth();

 private:
  friend class TaskGroup;
  struct Node;
  struct Worker;

  void push(Node* n, bool steal_only);
  Node* pop_local(Worker& w, std::uint64_t fence);
  Node* steal(int thief);
  void execute(Node* n, int identity);
  void execute_top(Node* n, int identity);
  void point(Worker& w);
  bool maybe_fire(Worker& w, Node* popped);
  void idle_pause(unsigned& misses);
  void pool_loop(int index);
  void wait_group(TaskGroup& g);
  void pfor(std::size_t lo, std::size_t hi, const std::function<void(std::size_t)>& body);

  SchedulerOptions opts_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::vector<std::thread> threads_;
  std::mutex sleep_mu_;
  std::condition_variable sleep_cv_;
  std::atomic<int> sleepers_{0};
  std::atomic<bool> active_{false};
  std::atomic<bool> shutdown_{false};
  std::atomic<std::uint64_t> next_id_{0};
  std::mutex error_mu_;
  std::exception_ptr error_;
  // Steal injection bookkeeping (single worker).
  Node* inject_target_ = nullptr;
  std::uint64_t inject_spawn_point_ = 0;
  bool injected_ = false;
  int next_virtual_ = 0;
};

}  // namespace pcycle
