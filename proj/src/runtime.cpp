#include "pcycle/runtime.hpp"

#include <chrono>
#include <deque>
#include <random>
#include <time.h>

namespace pcycle {

namespace {

thread_local Scheduler* tl_sched = nullptr;
thread_local int tl_worker = -1;
thread_local int tl_identity = -1;
thread_local int tl_depth = 0;

std::uint64_t thread_cpu_ns() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<std::uint64_t>(ts.tv_sec) * 1000000000ull +
         static_cast<std::uint64_t>(ts.tv_nsec);
}

}  // namespace

struct Scheduler::Node {
  std::function<void(const TaskContext&)> fn;
  TaskGroup* group = nullptr;
  std::uint64_t id = 0;
  int depth = 0;
  int creator = 0;
  bool taken = false;  // tombstone left behind by an injected steal
};

struct alignas(64) Scheduler::Worker {
  std::mutex mu;
  std::deque<Node*> dq;  // back holds the newest task
  std::uint64_t base = 0;  // absolute index of dq.front()
  std::deque<Node*> mailbox;
  std::mt19937_64 rng;
  std::uint64_t points = 0;
  std::atomic<std::uint64_t> spawned{0};
  std::atomic<std::uint64_t> stolen{0};
  std::atomic<std::uint64_t> completed{0};
  std::atomic<std::uint64_t> busy_ns{0};
};

TaskGroup::TaskGroup() : sched_(tl_sched), worker_(tl_worker), fence_(0) {
  if (sched_ == nullptr) throw std::logic_error("TaskGroup used outside a scheduler");
  auto& w = *sched_->workers_[static_cast<std::size_t>(worker_)];
  std::lock_guard lk(w.mu);
  fence_ = w.base + w.dq.size();
}

TaskGroup::~TaskGroup() {
  if (pending_.load(std::memory_order_acquire) > 0) {
    try {
      wait();
    } catch (...) {
    }
  }
}

std::uint64_t TaskGroup::spawn(std::function<void(const TaskContext&)> fn, bool steal_only) {
  auto* n = new Scheduler::Node;
  n->fn = std::move(fn);
  n->group = this;
  n->id = sched_->next_id_.fetch_add(1, std::memory_order_relaxed) + 1;
  n->depth = tl_depth + 1;
  n->creator = tl_identity;
  pending_.fetch_add(1, std::memory_order_acq_rel);
  const std::uint64_t id = n->id;
  sched_->push(n, steal_only);
  return id;
}

void TaskGroup::wait() { sched_->wait_group(*this); }

Scheduler::Scheduler(SchedulerOptions opts) : opts_(std::move(opts)) {
  if (opts_.workers < 1) opts_.workers = 1;
  for (int i = 0; i < opts_.workers; ++i) {
    auto w = std::make_unique<Worker>();
    w->rng.seed(opts_.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i) + 1);
    workers_.push_back(std::move(w));
  }
  for (int i = 1; i < opts_.workers; ++i) threads_.emplace_back([this, i] { pool_loop(i); });
}

Scheduler::~Scheduler() {
  shutdown_.store(true);
  {
    std::lock_guard lk(sleep_mu_);
  }
  sleep_cv_.notify_all();
  for (auto& t : threads_) t.join();
  for (auto& w : workers_) {
    for (Node* n : w->dq) delete n;
    for (Node* n : w->mailbox) delete n;
  }
}

int Scheduler::current_worker() { return tl_worker; }
int Scheduler::current_identity() { return tl_identity; }
int Scheduler::current_depth() { return tl_depth; }

void Scheduler::push(Node* n, bool steal_only) {
  auto& w = *workers_[static_cast<std::size_t>(tl_worker)];
  w.spawned.fetch_add(1, std::memory_order_relaxed);
  if (opts_.inject && !injected_ && inject_target_ == nullptr && n->id == opts_.inject->task_id) {
    inject_target_ = n;
    inject_spawn_point_ = w.points;
  }
  {
    std::lock_guard lk(w.mu);
    if (steal_only && opts_.workers > 1)
      w.mailbox.push_back(n);
    else
      w.dq.push_back(n);
  }
  if (sleepers_.load(std::memory_order_relaxed) > 0) sleep_cv_.notify_one();
}

Scheduler::Node* Scheduler::pop_local(Worker& w, std::uint64_t fence) {
  std::lock_guard lk(w.mu);
  while (!w.dq.empty() && w.base + w.dq.size() > fence) {
    Node* n = w.dq.back();
    w.dq.pop_back();
    if (n->taken) {
      delete n;
      continue;
    }
    return n;
  }
  return nullptr;
}

Scheduler::Node* Scheduler::steal(int thief) {
  const int p = opts_.workers;
  if (p <= 1) return nullptr;
  auto& self = *workers_[static_cast<std::size_t>(thief)];
  const int start = static_cast<int>(self.rng() % static_cast<std::uint64_t>(p));
  for (int k = 0; k < p; ++k) {
    const int v = (start + k) % p;
    if (v == thief) continue;
    auto& w = *workers_[static_cast<std::size_t>(v)];
    std::unique_lock lk(w.mu, std::try_to_lock);
    if (!lk.owns_lock()) continue;
    if (!w.mailbox.empty()) {
      Node* n = w.mailbox.front();
      w.mailbox.pop_front();
      return n;
    }
    while (!w.dq.empty()) {
      Node* n = w.dq.front();
      w.dq.pop_front();
      ++w.base;
      if (n->taken) {
        delete n;
        continue;
      }
      return n;
    }
  }
  return nullptr;
}

void Scheduler::execute(Node* n, int identity) {
  TaskContext ctx{n->id, n->depth, n->creator, identity};
  if (identity != n->creator) workers_[static_cast<std::size_t>(tl_worker)]->stolen.fetch_add(1);
  const int saved_identity = tl_identity;
  const int saved_depth = tl_depth;
  tl_identity = identity;
  tl_depth = n->depth;
  point(*workers_[static_cast<std::size_t>(tl_worker)]);
  try {
    n->fn(ctx);
  } catch (...) {
    std::lock_guard lk(error_mu_);
    if (!error_) error_ = std::current_exception();
  }
  tl_identity = saved_identity;
  tl_depth = saved_depth;
  TaskGroup* g = n->group;
  delete n;
  workers_[static_cast<std::size_t>(tl_worker)]->completed.fetch_add(1, std::memory_order_relaxed);
  g->pending_.fetch_sub(1, std::memory_order_acq_rel);
}

void Scheduler::execute_top(Node* n, int identity) {
  const std::uint64_t t0 = thread_cpu_ns();
  execute(n, identity);
  workers_[static_cast<std::size_t>(tl_worker)]->busy_ns.fetch_add(thread_cpu_ns() - t0);
}

// Fires the pending injected steal when its delay has elapsed or when the
// creator is about to run the target itself. Returns true if `popped` was
// consumed.
bool Scheduler::maybe_fire(Worker& w, Node* popped) {
  if (inject_target_ == nullptr || injected_) return false;
  Node* target = inject_target_;
  const bool due = w.points - inject_spawn_point_ >= opts_.inject->delay;
  if (popped != nullptr && popped != target) return false;
  if (popped == nullptr && !due) return false;
  injected_ = true;
  inject_target_ = nullptr;
  const int thief = opts_.workers + next_virtual_++;
  if (popped == target) {
    execute(target, thief);
    return true;
  }
  // Still queued: move the work into a fresh node and leave a tombstone.
  Node* moved = nullptr;
  {
    std::lock_guard lk(w.mu);
    bool queued = false;
    for (Node* q : w.dq)
      if (q == target) queued = true;
    if (!queued) return false;  // already run or stolen; nothing to do
    moved = new Node(std::move(*target));
    target->taken = true;
    target->fn = nullptr;
  }
  execute(moved, thief);
  return false;
}

void Scheduler::point(Worker& w) {
  ++w.points;
  if (inject_target_ != nullptr && tl_worker == 0 && opts_.workers == 1) maybe_fire(w, nullptr);
  if (opts_.perturb && opts_.workers > 1) {
    const auto r = w.rng() % 64;
    if (r == 0)
      std::this_thread::sleep_for(std::chrono::microseconds(20));
    else if (r < 4)
      std::this_thread::yield();
  }
}

void Scheduler::idle_pause(unsigned& misses) {
  ++misses;
  if (misses < 16) {
    std::this_thread::yield();
  } else {
    std::this_thread::sleep_for(std::chrono::microseconds(misses < 64 ? 10 : 50));
  }
}

void Scheduler::wait_group(TaskGroup& g) {
  auto& w = *workers_[static_cast<std::size_t>(tl_worker)];
  point(w);
  unsigned misses = 0;
  while (g.pending_.load(std::memory_order_acquire) > 0) {
    if (Node* n = pop_local(w, g.fence_)) {
      misses = 0;
      if (opts_.workers == 1 && maybe_fire(w, n)) continue;
      execute(n, tl_worker);
      continue;
    }
    if (Node* n = steal(tl_worker)) {
      misses = 0;
      execute(n, tl_worker);
      continue;
    }
    if (opts_.workers == 1 && g.pending_.load() > 0) {
      // Only a tombstoned task could be outstanding; nothing else can progress.
      break;
    }
    idle_pause(misses);
  }
  point(w);
}

void Scheduler::pool_loop(int index) {
  tl_sched = this;
  tl_worker = index;
  tl_identity = index;
  unsigned misses = 0;
  while (!shutdown_.load()) {
    if (!active_.load(std::memory_order_acquire)) {
      std::unique_lock lk(sleep_mu_);
      sleep_cv_.wait_for(lk, std::chrono::milliseconds(5),
                         [&] { return active_.load() || shutdown_.load(); });
      continue;
    }
    if (Node* n = steal(index)) {
      misses = 0;
      execute_top(n, index);
      continue;
    }
    if (++misses < 64) {
      std::this_thread::yield();
      continue;
    }
    sleepers_.fetch_add(1);
    {
      std::unique_lock lk(sleep_mu_);
      sleep_cv_.wait_for(lk, std::chrono::microseconds(500));
    }
    sleepers_.fetch_sub(1);
    misses = 32;
  }
  tl_sched = nullptr;
  tl_worker = -1;
}

void Scheduler::run(const std::function<void()>& root) {
  for (auto& w : workers_) {
    w->spawned = 0;
    w->stolen = 0;
    w->completed = 0;
    w->busy_ns = 0;
    w->points = 0;
  }
  injected_ = false;
  inject_target_ = nullptr;
  next_virtual_ = 0;
  next_id_ = 0;
  error_ = nullptr;
  Scheduler* saved_sched = tl_sched;
  const int saved_worker = tl_worker;
  const int saved_identity = tl_identity;
  const int saved_depth = tl_depth;
  tl_sched = this;
  tl_worker = 0;
  tl_identity = 0;
  tl_depth = 0;
  active_.store(true, std::memory_order_release);
  sleep_cv_.notify_all();
  const std::uint64_t t0 = thread_cpu_ns();
  std::exception_ptr root_error;
  try {
    root();
  } catch (...) {
    root_error = std::current_exception();
  }
  workers_[0]->busy_ns.fetch_add(thread_cpu_ns() - t0);
  active_.store(false, std::memory_order_release);
  tl_sched = saved_sched;
  tl_worker = saved_worker;
  tl_identity = saved_identity;
  tl_depth = saved_depth;
  if (root_error) std::rethrow_exception(root_error);
  if (error_) std::rethrow_exception(error_);
}

void Scheduler::pfor(std::size_t lo, std::size_t hi,
                     const std::function<void(std::size_t)>& body) {
  if (hi <= lo) return;
  if (hi - lo == 1) {
    body(lo);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  TaskGroup g;
  g.spawn([this, mid, hi, &body](const TaskContext&) { pfor(mid, hi, body); });
  g.spawn([this, lo, mid, &body](const TaskContext&) { pfor(lo, mid, body); });
  g.wait();
}

void Scheduler::parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  pfor(0, n, body);
}

RuntimeStats Scheduler::stats() const {
  RuntimeStats s;
  s.injected = injected_;
  for (const auto& w : workers_) {
    s.spawned += w->spawned.load();
    s.stolen += w->stolen.load();
    s.completed += w->completed.load();
    s.busy_ns.push_back(w->busy_ns.load());
  }
  return s;
}

}  // namespace pcycle
