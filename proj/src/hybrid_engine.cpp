#include "mce/hybrid_engine.hpp"

#include <algorithm>
#include <chrono>

#include "mce/edge_engine.hpp"
#include "pivot_core.hpp"

namespace mce {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RunStats hbbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options) {
  validate(options);
  RunStats stats;
  auto t0 = std::chrono::steady_clock::now();
  const auto order = truss_edge_order(g);
  stats.ordering_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  detail::PivotCore core(g, sink, options, stats);
  const auto* rank = options.rank_filter ? &order.rank : nullptr;
  VertexSet plus, minus;
  for (std::uint32_t r = 0; r < order.by_rank.size(); ++r) {
    const EdgeId e = order.by_rank[r];
    const auto [u, v] = g.endpoints(e);
    const VertexId partial[2] = {u, v};
    if (order.support_at_removal[e] == 0 && !options.check_invariants) {
      // No candidates: {u, v} is maximal iff the edge lies in no triangle.
      ++stats.recursive_calls;
      if (order.support[e] == 0) sink.emit(partial);
      continue;
    }
    split_common_neighbors(g, order, e, plus, minus);
    stats.max_level1_candidates = std::max(stats.max_level1_candidates, plus.size());
    core.run(partial, plus, minus, rank, r);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      const VertexId single[1] = {v};
      sink.emit(single);
    }
  }
  stats.enumeration_ms = ms_since(t0);
  return stats;
}

RunStats hybrid_recurse(const Graph& g, const TrussEdgeOrder& order, const FilteredBranch& b, CliqueSink& sink,
                        const EngineOptions& options) {
  validate(options);
  RunStats stats;
  VertexSet candidates = b.branch.candidates, excluded = b.branch.excluded;
  std::sort(candidates.begin(), candidates.end());
  std::sort(excluded.begin(), excluded.end());
  detail::PivotCore core(g, sink, options, stats);
  core.run(b.branch.partial, candidates, excluded, options.rank_filter ? &order.rank : nullptr, b.rank_floor);
  return stats;
}

BranchSizeProfile branch_size_profile(const Graph& g, int et_threshold) {
  BranchSizeProfile profile;
  const auto order = truss_edge_order(g);
  profile.tau = order.tau;
  profile.level1_sizes.assign(g.edge_count(), 0);
  VertexSet plus, minus;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    split_common_neighbors(g, order, e, plus, minus);
    const auto size = static_cast<std::uint32_t>(plus.size());
    profile.level1_sizes[e] = size;
    ++profile.histogram[size];
    profile.max_size = std::max(profile.max_size, size);
  }
  CliqueSink sink(SinkMode::count);
  EngineOptions options;
  options.et_threshold = et_threshold;
  profile.recursive_calls = hbbmc_enumerate(g, sink, options).recursive_calls;
  return profile;
}

}  // namespace mce
