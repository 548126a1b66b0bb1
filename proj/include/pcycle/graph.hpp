#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "pcycle/types.hpp"

namespace pcycle {

struct TemporalEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp ts = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
  friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

struct IngestOptions {
  bool untimed = false;
};

/// One adjacency group: all parallel edges towards (or from) `neighbor`.
/// Timestamps live in a shared pool indexed by [begin, end).
struct AdjGroup {
  VertexId neighbor = 0;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
};

/// Immutable directed multigraph with bundle-grouped CSR adjacency.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Builds a graph over vertices [0, n). Self-loops are dropped and counted.
  static TemporalGraph from_edges(std::size_t n, std::vector<TemporalEdge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return out_ts_.size(); }
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  std::span<const AdjGroup> out_groups(VertexId v) const;
  std::span<const AdjGroup> in_groups(VertexId v) const;
  std::span<const Timestamp> out_ts(const AdjGroup& g) const {
    return {out_ts_.data() + g.begin, g.end - g.begin};
  }
  std::span<const Timestamp> in_ts(const AdjGroup& g) const {
    return {in_ts_.data() + g.begin, g.end - g.begin};
  }

  /// All edges in (src, dst, ts) order.
  std::vector<TemporalEdge> edges() const;

  /// Original input id of each dense vertex (identity for generated graphs).
  const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
  void set_original_ids(std::vector<std::int64_t> ids);

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b);
  friend TemporalGraph load_edge_list(std::istream& in, const IngestOptions& opts);

 private:
  std::size_t n_ = 0;
  std::size_t dropped_self_loops_ = 0;
  std::vector<std::uint32_t> out_off_, in_off_;
  std::vector<AdjGroup> out_groups_, in_groups_;
  std::vector<Timestamp> out_ts_, in_ts_;
  std::vector<std::int64_t> original_ids_;
};

/// Parses "src dst [ts]" lines; '#' starts a comment line. Input ids are
/// remapped to dense ids in ascending order of the original id.
TemporalGraph load_edge_list(std::istream& in, const IngestOptions& opts = {});
void save_edge_list(const TemporalGraph& g, std::ostream& out);
void save_id_mapping(const TemporalGraph& g, std::ostream& out);

/// Time-window view over a graph with an optional vertex mask; never copies.
struct WindowView {
  const TemporalGraph* base = nullptr;
  Timestamp lo = kTsMin;
  Timestamp hi = kTsMax;
  const std::vector<std::uint8_t>* mask = nullptr;

  bool admits(VertexId v) const { return mask == nullptr || (*mask)[v] != 0; }
};

struct NeighborEntry {
  VertexId neighbor;
  std::span<const Timestamp> timestamps;
};

/// In-window subrange of a sorted timestamp list.
std::span<const Timestamp> clip(std::span<const Timestamp> ts, Timestamp lo, Timestamp hi);

/// Out-neighbors of v in ascending id order with in-window timestamps;
/// groups left empty by the window or rejected by the mask are skipped.
std::vector<NeighborEntry> neighbors(const TemporalGraph& g, VertexId v,
                                     const WindowView* view = nullptr);

}  // namespace pcycle
