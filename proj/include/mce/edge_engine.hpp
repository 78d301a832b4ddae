#pragma once

#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/engine.hpp"
#include "mce/graph.hpp"
#include "mce/orderings.hpp"

namespace mce {

/// Splits N({u, v}, G) for e = (u, v): `plus` gets w with rank(u, w) and
/// rank(v, w) both above rank(e), `minus` the rest. Both come out ascending.
void split_common_neighbors(const Graph& g, const TrussEdgeOrder& order, EdgeId e, VertexSet& plus,
                            VertexSet& minus);

/// Per-edge auxiliary sets. Edge sets are listed in ascending rank.
struct EdgeAux {
  std::vector<VertexSet> vplus;
  std::vector<EdgeSet> eplus;   // edges inside vplus ranked after e
  std::vector<VertexSet> vminus;
  std::vector<EdgeSet> eminus;  // edges inside N(V(e), G) not in eplus
};

EdgeAux build_edge_aux(const Graph& g, const TrussEdgeOrder& order);

/// Edge-oriented branch. S always has even size; candidate_edges are listed
/// in ascending rank and join candidate vertices only.
struct EdgeBranch {
  VertexSet partial;
  VertexSet candidates;
  EdgeSet candidate_edges;
  VertexSet excluded;
};

/// For every candidate without candidate edges, emits S + {v} when no other
/// vertex of candidates + excluded (= N(S, G)) is adjacent to v. Returns the
/// number of cliques emitted.
std::size_t zero_degree_terminate(const Graph& g, const EdgeBranch& b, CliqueSink& sink);

/// Edge-oriented branch-and-bound over the truss edge order: each branch
/// consumes candidate edges in ascending rank, and odd-size cliques surface
/// through the zero-degree sweep.
RunStats ebbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options = {});

}  // namespace mce
