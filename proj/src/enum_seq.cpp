#include "pcycle/enum_seq.hpp"

#include "pcycle/enum_constrained.hpp"
#include "unit_search.hpp"

namespace pcycle {

namespace {

VisitCounters run(detail::Algo algo, const TemporalGraph& g, const Constraints& c, const RtOptions& rt,
                  CycleSink* sink, const SeqOptions& opts) {
  auto search = detail::make_unit_search(algo, g.num_vertices(), c, rt, !opts.bundles);
  return detail::run_sequential(g, c, sink, opts, *search).visits;
}

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

VisitCounters tiernan_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                const SeqOptions& opts) {
  return run(detail::Algo::tiernan, g, c, {}, sink, opts);
}

VisitCounters johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                const SeqOptions& opts) {
  require(c.mode == Mode::simple, "johnson_enumerate expects simple mode");
  return run(detail::Algo::johnson, g, c, {}, sink, opts);
}

VisitCounters read_tarjan_enumerate(const TemporalGraph& g, const Constraints& c, const RtOptions& rt,
                                    CycleSink* sink, const SeqOptions& opts) {
  require(c.mode != Mode::hop, "read-tarjan does not support hop mode");
  return run(detail::Algo::read_tarjan, g, c, rt, sink, opts);
}

VisitCounters temporal_johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                         const SeqOptions& opts) {
  require(c.mode == Mode::temporal, "temporal_johnson_enumerate expects temporal mode");
  return run(detail::Algo::johnson, g, c, {}, sink, opts);
}

VisitCounters hop_johnson_enumerate(const TemporalGraph& g, const Constraints& c, CycleSink* sink,
                                    const SeqOptions& opts) {
  require(c.mode == Mode::hop, "hop_johnson_enumerate expects hop mode");
  return run(detail::Algo::johnson, g, c, {}, sink, opts);
}

VisitCounters temporal_read_tarjan_enumerate(const TemporalGraph& g, const Constraints& c,
                                             const RtOptions& rt, CycleSink* sink, const SeqOptions& opts) {
  require(c.mode == Mode::temporal, "temporal_read_tarjan_enumerate expects temporal mode");
  return run(detail::Algo::read_tarjan, g, c, rt, sink, opts);
}

}  // namespace pcycle
