#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/engine.hpp"
#include "mce/graph.hpp"
#include "mce/orderings.hpp"

namespace mce {

/// Edge-oriented split of the initial branch followed by pivot recursion.
///
/// Edges are visited in ascending truss rank. The branch of e = (u, v) starts
/// with S = {u, v}, candidates V+(e) (common neighbors w whose edges to u and
/// v both rank after e) and exclusion V-(e) (the other common neighbors).
/// Inside the branch only candidate edges ranked after e exist; a G-neighbor
/// of a newly added vertex that lacks such an edge moves to the exclusion
/// side. Each maximal clique is thereby reported only from the branch of its
/// earliest-ranked edge. Isolated vertices are emitted last.
RunStats hbbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options = {});

/// A level-1 branch whose candidate edges are the G-edges ranked above
/// rank_floor.
struct FilteredBranch {
  Branch branch;
  std::uint32_t rank_floor = 0;
};

/// Pivot recursion on a filtered branch. Requires candidates + excluded =
/// N(partial, G).
RunStats hybrid_recurse(const Graph& g, const TrussEdgeOrder& order, const FilteredBranch& b, CliqueSink& sink,
                        const EngineOptions& options = {});

/// |V+(e)| for every edge, plus the recursion size of a full run.
struct BranchSizeProfile {
  std::vector<std::uint32_t> level1_sizes;  // indexed by edge id
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint32_t max_size = 0;
  std::uint32_t tau = 0;
  std::uint64_t recursive_calls = 0;
};

BranchSizeProfile branch_size_profile(const Graph& g, int et_threshold = 3);

}  // namespace mce
