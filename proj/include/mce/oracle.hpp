#pragma once

#include <vector>

#include "mce/graph.hpp"

namespace mce::oracle {

inline constexpr std::size_t kExhaustiveLimit = 20;

/// Checks every vertex subset for being a maximal clique. Output sorted
/// lexicographically. Throws std::length_error above kExhaustiveLimit vertices.
std::vector<VertexSet> exhaustive_mce(const Graph& g);

/// Textbook pivot Bron-Kerbosch over the whole vertex set, no ordering and no
/// filtering. Output sorted lexicographically.
std::vector<VertexSet> reference_bk(const Graph& g);

/// Sorts each clique and the list itself, for set comparison.
void canonicalize(std::vector<VertexSet>& cliques);

}  // namespace mce::oracle
