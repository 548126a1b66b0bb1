#include "pcycle/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace pcycle {

VisitCounters& VisitCounters::operator+=(const VisitCounters& o) {
  edge_visits += o.edge_visits;
  vertex_visits += o.vertex_visits;
  unblock_calls += o.unblock_calls;
  dfs_calls += o.dfs_calls;
  return *this;
}

MetricsSnapshot merge(const MetricsSnapshot& a, const MetricsSnapshot& b) {
  MetricsSnapshot r;
  r.visits = a.visits;
  r.visits += b.visits;
  r.tasks_spawned = a.tasks_spawned + b.tasks_spawned;
  r.tasks_stolen = a.tasks_stolen + b.tasks_stolen;
  r.cycles_reported = a.cycles_reported + b.cycles_reported;
  r.bundles_reported = a.bundles_reported + b.bundles_reported;
  r.busy_ns.assign(std::max(a.busy_ns.size(), b.busy_ns.size()), 0);
  for (std::size_t i = 0; i < a.busy_ns.size(); ++i) r.busy_ns[i] += a.busy_ns[i];
  for (std::size_t i = 0; i < b.busy_ns.size(); ++i) r.busy_ns[i] += b.busy_ns[i];
  r.wall_ns = std::max(a.wall_ns, b.wall_ns);
  return r;
}

double busy_time_cv(const MetricsSnapshot& m) {
  if (m.busy_ns.empty()) return 0.0;
  double mean = 0;
  for (auto b : m.busy_ns) mean += static_cast<double>(b);
  mean /= static_cast<double>(m.busy_ns.size());
  if (mean == 0) return 0.0;
  double var = 0;
  for (auto b : m.busy_ns) var += (static_cast<double>(b) - mean) * (static_cast<double>(b) - mean);
  var /= static_cast<double>(m.busy_ns.size());
  return std::sqrt(var) / mean;
}

std::string export_metrics(const MetricsSnapshot& m, ExportFormat f) {
  if (f == ExportFormat::json) {
    nlohmann::ordered_json j;
    j["schema"] = "pcycle.metrics.v1";
    j["edge_visits"] = m.visits.edge_visits;
    j["vertex_visits"] = m.visits.vertex_visits;
    j["unblock_calls"] = m.visits.unblock_calls;
    j["dfs_calls"] = m.visits.dfs_calls;
    j["tasks_spawned"] = m.tasks_spawned;
    j["tasks_stolen"] = m.tasks_stolen;
    j["cycles_reported"] = m.cycles_reported;
    j["bundles_reported"] = m.bundles_reported;
    j["wall_ns"] = m.wall_ns;
    j["busy_ns"] = m.busy_ns;
    return j.dump();
  }
  std::ostringstream os;
  os << "counter,value\n"
     << "edge_visits," << m.visits.edge_visits << '\n'
     << "vertex_visits," << m.visits.vertex_visits << '\n'
     << "unblock_calls," << m.visits.unblock_calls << '\n'
     << "dfs_calls," << m.visits.dfs_calls << '\n'
     << "tasks_spawned," << m.tasks_spawned << '\n'
     << "tasks_stolen," << m.tasks_stolen << '\n'
     << "cycles_reported," << m.cycles_reported << '\n'
     << "bundles_reported," << m.bundles_reported << '\n'
     << "wall_ns," << m.wall_ns << '\n'
     << "\nworker,busy_ns\n";
  for (std::size_t w = 0; w < m.busy_ns.size(); ++w) os << w << ',' << m.busy_ns[w] << '\n';
  return os.str();
}

}  // namespace pcycle
