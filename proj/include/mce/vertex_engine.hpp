#pragma once

#include "mce/clique_sink.hpp"
#include "mce/engine.hpp"
#include "mce/graph.hpp"

namespace mce {

/// Bron-Kerbosch with the max-candidate-degree pivot. The initial branch is
/// split along the degeneracy order: the i-th vertex v starts S = {v} with its
/// later neighbors as candidates and earlier neighbors as exclusion, so every
/// level-1 candidate set has at most delta vertices.
RunStats vbbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options = {});

/// Runs the pivot recursion on one branch (candidate adjacency = G). Requires
/// candidates + excluded = N(partial, G) when partial is non-empty.
RunStats vbbmc_recurse(const Graph& g, const Branch& b, CliqueSink& sink, const EngineOptions& options = {});

}  // namespace mce
