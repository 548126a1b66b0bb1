#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pcycle/graph.hpp"

namespace pcycle {

enum class Mode { simple, temporal, hop };

struct Constraints {
  Mode mode = Mode::simple;
  /// Window length; nullopt means unbounded.
  std::optional<Timestamp> window;
  /// Hop limit L, used in hop mode only.
  int max_hops = 0;
  /// Temporal mode: accept equal consecutive timestamps.
  bool nondecreasing = false;

  /// Searches start from single edges (otherwise from a start vertex and
  /// one neighbor group, with the larger-id guard).
  bool edge_rooted() const { return mode == Mode::temporal || window.has_value(); }
  void validate() const;
};

/// The unit of work a single search starts from.
struct StartUnit {
  VertexId root = 0;
  VertexId first = 0;
  std::uint32_t group = 0;  // index into out_groups(root)
  Timestamp t0 = 0;         // start-edge timestamp, edge-rooted searches only

  friend bool operator==(const StartUnit&, const StartUnit&) = default;
};

/// Start units in ascending (root, first, t0) order.
std::vector<StartUnit> start_units(const TemporalGraph& g, const Constraints& c);

/// Everything a search needs to decide which edges and vertices it may use.
class SearchContext {
 public:
  SearchContext(const TemporalGraph& g, const Constraints& c, const StartUnit& u,
                const std::vector<std::uint8_t>* mask = nullptr);

  const TemporalGraph& graph() const { return *g_; }
  const Constraints& constraints() const { return *c_; }
  const StartUnit& unit() const { return unit_; }
  VertexId root() const { return unit_.root; }
  VertexId first() const { return unit_.first; }
  Timestamp t0() const { return unit_.t0; }
  Timestamp lo() const { return lo_; }
  Timestamp hi() const { return hi_; }
  bool temporal() const { return c_->mode == Mode::temporal; }
  bool strict() const { return !c_->nondecreasing; }
  int max_hops() const { return c_->max_hops; }

  void set_mask(const std::vector<std::uint8_t>* mask) { mask_ = mask; }

  /// Timestamps of the first hop: the start edge alone, or the whole group.
  std::span<const Timestamp> first_hop() const { return first_hop_; }

  bool enterable(VertexId w) const {
    if (w == unit_.root) return true;
    if (id_guard_ && w < unit_.root) return false;
    return mask_ == nullptr || (*mask_)[w] != 0;
  }

  /// Subrange of an edge group from `src` usable by this search: the window,
  /// plus the equal-timestamp tie-break outside temporal mode.
  std::span<const Timestamp> admissible(VertexId src, std::span<const Timestamp> ts) const;

  /// Position of the first timestamp that may follow an arrival at `arrival`.
  std::size_t first_following(std::span<const Timestamp> ts, Timestamp arrival) const;
  bool follows(Timestamp prev, Timestamp next) const { return strict() ? next > prev : next >= prev; }
  /// Closing value that keeps every arrival able to leave at `departure`.
  Timestamp closing_from_departure(Timestamp departure) const {
    return strict() || departure == kTsMax ? departure : departure + 1;
  }

 private:
  const TemporalGraph* g_;
  const Constraints* c_;
  StartUnit unit_;
  const std::vector<std::uint8_t>* mask_;
  bool id_guard_;
  Timestamp lo_, hi_;
  std::span<const Timestamp> first_hop_;
};

}  // namespace pcycle
