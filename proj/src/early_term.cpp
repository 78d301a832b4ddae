#include "mce/early_term.hpp"

#include <algorithm>
#include <stdexcept>

namespace mce::early_term {

std::optional<int> detect_plex(std::size_t candidate_count, std::size_t min_candidate_degree,
                               bool exclusion_empty, std::size_t candidate_edge_count,
                               std::size_t induced_edge_count, int max_t) {
  if (!exclusion_empty || candidate_count == 0) return std::nullopt;
  if (candidate_edge_count != induced_edge_count) return std::nullopt;
  if (min_candidate_degree >= candidate_count) return std::nullopt;  // impossible for a simple graph
  const auto t = static_cast<int>(candidate_count - min_candidate_degree);
  if (t > max_t) return std::nullopt;
  return t;
}

PlexStructure decompose(std::span<const VertexId> vertices, std::span<const ComplementLinks> complement, int t) {
  if (t < 1 || t > kMaxPlex) throw std::invalid_argument("plex order must be 1, 2 or 3");
  if (complement.size() != vertices.size()) throw std::invalid_argument("complement size mismatch");
  for (const auto& links : complement) {
    if (links.count > static_cast<std::uint32_t>(t - 1)) {
      throw std::invalid_argument("candidate graph is not a " + std::to_string(t) + "-plex");
    }
  }

  PlexStructure plex;
  plex.t = t;
  const auto c = vertices.size();
  std::vector<bool> seen(c, false);
  for (std::size_t i = 0; i < c; ++i) {
    if (complement[i].count == 0) {
      plex.full.push_back(vertices[i]);
      seen[i] = true;
    }
  }
  if (t == 1) return plex;

  if (t == 2) {
    for (std::size_t i = 0; i < c; ++i) {
      if (seen[i]) continue;
      const auto j = complement[i].to[0];
      if (complement[j].count != 1 || complement[j].to[0] != i) {
        throw std::invalid_argument("complement is not a matching");
      }
      seen[i] = seen[j] = true;
      plex.pairs.emplace_back(std::min(vertices[i], vertices[j]), std::max(vertices[i], vertices[j]));
    }
    std::sort(plex.pairs.begin(), plex.pairs.end());
    return plex;
  }

  auto walk = [&](std::size_t start, VertexSet& out) {
    std::size_t prev = c, cur = start;
    for (;;) {
      seen[cur] = true;
      out.push_back(vertices[cur]);
      std::size_t next = c;
      for (std::uint32_t k = 0; k < complement[cur].count; ++k) {
        const auto cand = complement[cur].to[k];
        if (cand != prev && !seen[cand]) {
          next = cand;
          break;
        }
      }
      if (next == c) return;
      prev = cur;
      cur = next;
    }
  };

  for (std::size_t i = 0; i < c; ++i) {
    if (!seen[i] && complement[i].count == 1) {
      VertexSet path;
      walk(i, path);
      plex.paths.push_back(std::move(path));
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (!seen[i]) {
      VertexSet cycle;
      walk(i, cycle);
      if (cycle.size() < 3) throw std::invalid_argument("malformed complement cycle");
      plex.cycles.push_back(std::move(cycle));
    }
  }
  return plex;
}

void enum_2plex(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink) {
  if (plex.pairs.size() >= 64) throw std::length_error("too many complement pairs");
  VertexSet clique(partial.begin(), partial.end());
  clique.insert(clique.end(), plex.full.begin(), plex.full.end());
  const auto base = clique.size();
  const std::uint64_t combos = std::uint64_t{1} << plex.pairs.size();
  for (std::uint64_t num = 0; num < combos; ++num) {
    clique.resize(base);
    for (std::size_t i = 0; i < plex.pairs.size(); ++i) {
      clique.push_back(((num >> i) & 1U) == 0 ? plex.pairs[i].first : plex.pairs[i].second);
    }
    sink.emit(clique);
  }
}

namespace {

void extend_path(std::span<const VertexId> path, VertexSet& current, std::size_t last, PartialSolutionSet& out) {
  if (last + 2 >= path.size()) {
    out.push_back(current);
    return;
  }
  current.push_back(path[last + 2]);
  extend_path(path, current, last + 2, out);
  current.pop_back();
  if (last + 3 < path.size()) {
    current.push_back(path[last + 3]);
    extend_path(path, current, last + 3, out);
    current.pop_back();
  }
}

}  // namespace

PartialSolutionSet enum_path(std::span<const VertexId> path, std::span<const VertexId> seed, std::size_t last_index) {
  if (last_index >= path.size()) throw std::out_of_range("seed position outside path");
  PartialSolutionSet out;
  VertexSet current(seed.begin(), seed.end());
  extend_path(path, current, last_index, out);
  return out;
}

PartialSolutionSet enum_path(std::span<const VertexId> path) {
  if (path.size() < 2) throw std::invalid_argument("complement path needs at least two vertices");
  PartialSolutionSet out = enum_path(path, path.subspan(0, 1), 0);
  auto second = enum_path(path, path.subspan(1, 1), 1);
  out.insert(out.end(), std::make_move_iterator(second.begin()), std::make_move_iterator(second.end()));
  return out;
}

PartialSolutionSet enum_cycle(std::span<const VertexId> c) {
  const auto k = c.size();
  if (k < 3) throw std::invalid_argument("complement cycle needs at least three vertices");
  if (k == 3) return {{c[0]}, {c[1]}, {c[2]}};
  if (k == 4) return {{c[0], c[2]}, {c[1], c[3]}};
  if (k == 5) return {{c[0], c[2]}, {c[0], c[3]}, {c[1], c[3]}, {c[1], c[4]}, {c[2], c[4]}};

  // v1 in the solution: v_k is excluded, walk v1..v_{k-1}.
  PartialSolutionSet out = enum_path(c.subspan(0, k - 1), c.subspan(0, 1), 0);
  // v2 in the solution: v1 is excluded, walk v2..v_k.
  auto case2 = enum_path(c.subspan(1), c.subspan(1, 1), 0);
  // Neither: v3 and v_k are forced, v_{k-1} is excluded, walk v3..v_{k-2}.
  const VertexId prefix[2] = {c[k - 1], c[2]};
  auto case3 = enum_path(c.subspan(2, k - 4), prefix, 0);
  for (auto* part : {&case2, &case3}) {
    out.insert(out.end(), std::make_move_iterator(part->begin()), std::make_move_iterator(part->end()));
  }
  return out;
}

void enum_3plex(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink) {
  std::vector<PartialSolutionSet> parts;
  parts.reserve(plex.paths.size() + plex.cycles.size());
  for (const auto& p : plex.paths) parts.push_back(enum_path(p));
  for (const auto& cyc : plex.cycles) parts.push_back(enum_cycle(cyc));

  VertexSet clique(partial.begin(), partial.end());
  clique.insert(clique.end(), plex.full.begin(), plex.full.end());
  const auto base = clique.size();

  // Mixed-radix counter over the components, last component fastest.
  std::vector<std::size_t> pick(parts.size(), 0);
  for (;;) {
    clique.resize(base);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& chosen = parts[i][pick[i]];
      clique.insert(clique.end(), chosen.begin(), chosen.end());
    }
    sink.emit(clique);

    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (parts.empty()) return;
  }
}

void enumerate(std::span<const VertexId> partial, const PlexStructure& plex, CliqueSink& sink) {
  switch (plex.t) {
    case 1: {
      VertexSet clique(partial.begin(), partial.end());
      clique.insert(clique.end(), plex.full.begin(), plex.full.end());
      sink.emit(clique);
      return;
    }
    case 2:
      enum_2plex(partial, plex, sink);
      return;
    case 3:
      enum_3plex(partial, plex, sink);
      return;
    default:
      throw std::invalid_argument("plex order must be 1, 2 or 3");
  }
}

}  // namespace mce::early_term
