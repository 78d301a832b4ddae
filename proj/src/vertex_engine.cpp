#include "mce/vertex_engine.hpp"

#include <algorithm>
#include <chrono>

#include "mce/orderings.hpp"
#include "pivot_core.hpp"

namespace mce {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RunStats vbbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options) {
  validate(options);
  RunStats stats;
  auto t0 = std::chrono::steady_clock::now();
  const auto order = degeneracy_order(g);
  stats.ordering_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  detail::PivotCore core(g, sink, options, stats);
  VertexSet later, earlier;
  for (VertexId v : order.order) {
    later.clear();
    earlier.clear();
    const auto pos = order.position[v];
    for (VertexId w : g.neighbors(v)) {
      (order.position[w] > pos ? later : earlier).push_back(w);
    }
    stats.max_level1_candidates = std::max(stats.max_level1_candidates, later.size());
    const VertexId partial[1] = {v};
    core.run(partial, later, earlier);
  }
  stats.enumeration_ms = ms_since(t0);
  return stats;
}

RunStats vbbmc_recurse(const Graph& g, const Branch& b, CliqueSink& sink, const EngineOptions& options) {
  validate(options);
  RunStats stats;
  VertexSet candidates = b.candidates, excluded = b.excluded;
  std::sort(candidates.begin(), candidates.end());
  std::sort(excluded.begin(), excluded.end());
  detail::PivotCore core(g, sink, options, stats);
  core.run(b.partial, candidates, excluded);
  return stats;
}

}  // namespace mce
