#pragma once

#include <cstdint>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

/// Min-degree peeling order.
struct DegeneracyOrder {
  std::vector<VertexId> order;           // order[i] = i-th removed vertex
  std::vector<std::uint32_t> position;   // inverse of order
  std::uint32_t degeneracy = 0;
};

/// Min-support edge peeling order. rank 0 is the first edge removed, which is
/// also the first edge branched on at the initial branch.
struct TrussEdgeOrder {
  std::vector<std::uint32_t> rank;  // rank[edge id]
  std::vector<EdgeId> by_rank;      // inverse of rank
  /// Residual support of each edge when it was removed.
  std::vector<std::uint32_t> support_at_removal;
  /// Triangles through each edge in the whole graph.
  std::vector<std::uint32_t> support;
  std::uint32_t tau = 0;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t delta = 0;
  std::uint32_t tau = 0;
  double rho = 0.0;
  bool condition = false;
};

/// Vertices peeled by minimum residual degree, ties to the smallest id.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Edges peeled by minimum residual support (common neighbors over live
/// edges), ties to the smallest edge id.
TrussEdgeOrder truss_edge_order(const Graph& g);

std::uint64_t triangle_count(const Graph& g);

/// delta >= max{3, tau + 3 ln(rho) / ln(3)}: the regime in which the hybrid
/// engine's worst-case bound beats the degeneracy-based vertex engine.
bool hybrid_condition(std::uint32_t delta, std::uint32_t tau, double rho);

GraphStats compute_stats(const Graph& g);

}  // namespace mce
