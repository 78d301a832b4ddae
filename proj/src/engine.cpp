#include "mce/engine.hpp"

#include <stdexcept>

namespace mce {

void validate(const EngineOptions& options) {
  if (options.et_threshold < 0 || options.et_threshold > 3) {
    throw std::invalid_argument("early-termination threshold must be in 0..3");
  }
}

PivotChoice select_pivot(const Graph& g, const Branch& b, const CandidateAdjacency& candidate_adjacent) {
  if (b.candidates.empty() && b.excluded.empty()) {
    throw std::invalid_argument("pivot selection needs a non-empty candidate or exclusion set");
  }
  PivotChoice choice;
  bool have = false;
  bool any_candidate = false;
  auto consider = [&](VertexId v, std::size_t count) {
    if (!have || count > choice.pivot_degree || (count == choice.pivot_degree && v < choice.pivot)) {
      choice.pivot = v;
      choice.pivot_degree = count;
      have = true;
    }
  };
  for (VertexId v : b.candidates) {
    std::size_t count = 0;
    for (VertexId w : b.candidates) {
      if (w != v && candidate_adjacent(v, w)) ++count;
    }
    choice.min_candidate_degree = any_candidate ? std::min(choice.min_candidate_degree, count) : count;
    any_candidate = true;
    consider(v, count);
  }
  for (VertexId x : b.excluded) {
    std::size_t count = 0;
    for (VertexId w : b.candidates) {
      if (g.adjacent(x, w)) ++count;
    }
    consider(x, count);
  }
  return choice;
}

PivotChoice select_pivot(const Graph& g, const Branch& b) {
  return select_pivot(g, b, [&g](VertexId u, VertexId v) { return g.adjacent(u, v); });
}

}  // namespace mce
