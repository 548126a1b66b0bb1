#pragma once

#include <cstdint>
#include <vector>

#include "pcycle/types.hpp"

namespace pcycle {

/// Search events recorded by single-worker runs for recursion comparisons.
struct TraceEvent {
  enum Kind : std::uint8_t { enter, leave, cycle, dfs };
  Kind kind;
  VertexId vertex;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct EventTrace {
  std::vector<TraceEvent> events;
  void push(TraceEvent::Kind k, VertexId v) { events.push_back({k, v}); }
};

}  // namespace pcycle
