#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/graph.hpp"

namespace mce {

/// Enumerates the maximal cliques of a branch directly when its candidate
/// graph is a t-plex (t <= 3) and its exclusion set is empty. The complement
/// of such a candidate graph has maximum degree t - 1, so it splits into
/// isolated vertices, a matching (t = 2), or simple paths and cycles (t = 3).
namespace early_term {

inline constexpr int kMaxPlex = 3;

/// Complement neighbors of one candidate, as indices into the candidate list.
struct ComplementLinks {
  std::uint32_t count = 0;
  std::array<std::uint32_t, 2> to{};
};

struct PlexStructure {
  int t = 1;
  VertexSet full;                                   // adjacent to every other candidate
  std::vector<std::pair<VertexId, VertexId>> pairs; // t = 2; first is the smaller id
  std::vector<VertexSet> paths;                     // t = 3; each of length >= 2
  std::vector<VertexSet> cycles;                    // t = 3; each of length >= 3
};

using PartialSolutionSet = std::vector<VertexSet>;

/// Smallest t with min_candidate_degree >= candidate_count - t, provided the
/// exclusion set is empty and the candidate edge set holds every G-edge
/// induced on the candidates. Empty when not eligible for any t <= max_t.
std::optional<int> detect_plex(std::size_t candidate_count, std::size_t min_candidate_degree,
                               bool exclusion_empty, std::size_t candidate_edge_count,
                               std::size_t induced_edge_count, int max_t = kMaxPlex);

/// Splits a t-plex into full vertices, pairs and complement components.
/// complement[i] lists the non-neighbors of vertices[i] (excluding itself).
/// For t = 2 components are reported as pairs, for t = 3 as paths/cycles.
PlexStructure decompose(std::span<const VertexId> vertices, std::span<const ComplementLinks> complement, int t);

/// Emits S + F + one endpoint of every pair, for all 2^|pairs| selections.
void enum_2plex(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink);

/// Extends seed (whose last element sits at path[last_index]) by steps of two
/// or three positions until no further step fits, collecting every result.
PartialSolutionSet enum_path(std::span<const VertexId> path, std::span<const VertexId> seed,
                             std::size_t last_index);

/// All partial solutions of a complement path, seeded from its first and
/// second vertices.
PartialSolutionSet enum_path(std::span<const VertexId> path);

/// All partial solutions of a complement cycle (length >= 3).
PartialSolutionSet enum_cycle(std::span<const VertexId> cycle);

/// Emits S + F + one solution per path and per cycle, over the full product.
void enum_3plex(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink);

/// Dispatch on plex.t: t = 1 emits S + F.
void enumerate(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink);

}  // namespace early_term
}  // namespace mce
