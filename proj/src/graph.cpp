#include "pcycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

namespace pcycle {

namespace {

void build_csr(std::size_t n, const std::vector<TemporalEdge>& sorted, bool by_src,
               std::vector<std::uint32_t>& off, std::vector<AdjGroup>& groups,
               std::vector<Timestamp>& pool) {
  off.assign(n + 1, 0);
  groups.clear();
  pool.clear();
  pool.reserve(sorted.size());
  std::size_t i = 0;
  for (VertexId v = 0; v < n; ++v) {
    off[v] = static_cast<std::uint32_t>(groups.size());
    while (i < sorted.size() && (by_src ? sorted[i].src : sorted[i].dst) == v) {
      VertexId nb = by_src ? sorted[i].dst : sorted[i].src;
      AdjGroup grp{nb, static_cast<std::uint32_t>(pool.size()), 0};
      while (i < sorted.size() && (by_src ? sorted[i].src : sorted[i].dst) == v &&
             (by_src ? sorted[i].dst : sorted[i].src) == nb) {
        pool.push_back(sorted[i].ts);
        ++i;
      }
      grp.end = static_cast<std::uint32_t>(pool.size());
      groups.push_back(grp);
    }
  }
  off[n] = static_cast<std::uint32_t>(groups.size());
}

}  // namespace

TemporalGraph TemporalGraph::from_edges(std::size_t n, std::vector<TemporalEdge> edges) {
  TemporalGraph g;
  g.n_ = n;
  auto loops = std::remove_if(edges.begin(), edges.end(),
                              [](const TemporalEdge& e) { return e.src == e.dst; });
  g.dropped_self_loops_ = static_cast<std::size_t>(edges.end() - loops);
  edges.erase(loops, edges.end());
  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n) throw ParameterError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  build_csr(n, edges, true, g.out_off_, g.out_groups_, g.out_ts_);
  std::sort(edges.begin(), edges.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    return std::tie(a.dst, a.src, a.ts) < std::tie(b.dst, b.src, b.ts);
  });
  build_csr(n, edges, false, g.in_off_, g.in_groups_, g.in_ts_);
  g.original_ids_.resize(n);
  for (std::size_t v = 0; v < n; ++v) g.original_ids_[v] = static_cast<std::int64_t>(v);
  return g;
}

std::span<const AdjGroup> TemporalGraph::out_groups(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return {out_groups_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
}

std::span<const AdjGroup> TemporalGraph::in_groups(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex id out of range");
  return {in_groups_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
}

std::vector<TemporalEdge> TemporalGraph::edges() const {
  std::vector<TemporalEdge> out;
  out.reserve(num_edges());
  for (VertexId v = 0; v < n_; ++v) {
    for (const auto& grp : out_groups(v)) {
      for (Timestamp t : out_ts(grp)) out.push_back({v, grp.neighbor, t});
    }
  }
  return out;
}

void TemporalGraph::set_original_ids(std::vector<std::int64_t> ids) {
  if (ids.size() != n_) throw ParameterError("id mapping size mismatch");
  original_ids_ = std::move(ids);
}

bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
  return a.n_ == b.n_ && a.edges() == b.edges();
}

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

TemporalGraph load_edge_list(std::istream& in, const IngestOptions& opts) {
  struct Raw {
    std::int64_t src, dst;
    Timestamp ts;
  };
  std::vector<Raw> raw;
  std::size_t self_loops = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    const bool arity_ok = toks.size() == 3 || (opts.untimed && toks.size() == 2);
    if (!arity_ok) throw ParseError(lineno, "expected 'src dst ts'");
    std::int64_t vals[3] = {0, 0, 0};
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (!parse_int(toks[k], vals[k])) throw ParseError(lineno, "non-integer token '" + toks[k] + "'");
    }
    if (vals[0] < 0 || vals[1] < 0) throw ParseError(lineno, "negative vertex id");
    if (opts.untimed) vals[2] = 0;
    if (vals[0] == vals[1]) {
      ++self_loops;
      continue;
    }
    raw.push_back({vals[0], vals[1], vals[2]});
  }
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& r : raw) {
    ids.push_back(r.src);
    ids.push_back(r.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::int64_t id) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<TemporalEdge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) edges.push_back({dense(r.src), dense(r.dst), r.ts});
  TemporalGraph g = TemporalGraph::from_edges(ids.size(), std::move(edges));
  g.set_original_ids(std::move(ids));
  g.dropped_self_loops_ = self_loops;
  return g;
}

void save_edge_list(const TemporalGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) out << e.src << ' ' << e.dst << ' ' << e.ts << '\n';
}

void save_id_mapping(const TemporalGraph& g, std::ostream& out) {
  const auto& ids = g.original_ids();
  for (std::size_t v = 0; v < ids.size(); ++v) out << ids[v] << ' ' << v << '\n';
}

std::span<const Timestamp> clip(std::span<const Timestamp> ts, Timestamp lo, Timestamp hi) {
  auto b = std::lower_bound(ts.begin(), ts.end(), lo);
  auto e = std::upper_bound(b, ts.end(), hi);
  return {b, e};
}

std::vector<NeighborEntry> neighbors(const TemporalGraph& g, VertexId v, const WindowView* view) {
  std::vector<NeighborEntry> out;
  for (const auto& grp : g.out_groups(v)) {
    auto ts = g.out_ts(grp);
    if (view != nullptr) {
      if (!view->admits(grp.neighbor)) continue;
      ts = clip(ts, view->lo, view->hi);
    }
    if (!ts.empty()) out.push_back({grp.neighbor, ts});
  }
  return out;
}

}  // namespace pcycle
