#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/graph.hpp"

namespace mce {

/// A branch that is about to be closed by early termination.
struct EarlyTermCapture {
  std::span<const VertexId> partial;
  std::span<const VertexId> candidates;
  std::span<const Edge> candidate_edges;
  int t = 0;
};

struct EngineOptions {
  /// 0 disables early termination; 1..3 terminates t-plex branches up to t.
  int et_threshold = 0;
  /// Verify branch-state invariants at every recursion entry (slow).
  bool check_invariants = false;
  /// Test-only: hybrid engine keeps every G-edge among the candidates.
  bool rank_filter = true;
  /// Called for every branch closed by early termination.
  std::function<void(const EarlyTermCapture&)> on_early_termination;
};

struct RunStats {
  std::uint64_t recursive_calls = 0;
  /// Branches that pass the plex test for some t <= 3, whether or not fired.
  std::uint64_t et_eligible_branches = 0;
  std::uint64_t et_fired_branches = 0;
  /// eligible_by_t[t-1]: branches eligible at threshold t.
  std::array<std::uint64_t, 3> eligible_by_t{};
  /// Odd-size cliques emitted by the edge engine's zero-degree sweep.
  std::uint64_t zero_degree_emits = 0;
  /// Largest candidate set of a level-1 branch.
  std::size_t max_level1_candidates = 0;
  double ordering_ms = 0.0;
  double enumeration_ms = 0.0;
};

/// Throws std::invalid_argument unless 0 <= et_threshold <= 3.
void validate(const EngineOptions& options);

/// Vertex-oriented branch: partial clique S, candidates C, exclusion X.
struct Branch {
  VertexSet partial;
  VertexSet candidates;
  VertexSet excluded;
};

struct PivotChoice {
  VertexId pivot = 0;
  std::size_t pivot_degree = 0;          // candidate neighbors of the pivot
  std::size_t min_candidate_degree = 0;  // over C; 0 when C is empty
};

/// Candidate adjacency used by the pivot rule.
using CandidateAdjacency = std::function<bool(VertexId, VertexId)>;

/// Picks v in C + X maximizing candidate neighbors in C, ties to the smallest
/// id. Members of C count along `candidate_adjacent`; members of X count along
/// G. Throws std::invalid_argument when C + X is empty.
PivotChoice select_pivot(const Graph& g, const Branch& b, const CandidateAdjacency& candidate_adjacent);
PivotChoice select_pivot(const Graph& g, const Branch& b);

}  // namespace mce
