#include "mce/edge_engine.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <stdexcept>

#include "mce/early_term.hpp"

namespace mce {

void split_common_neighbors(const Graph& g, const TrussEdgeOrder& order, EdgeId e, VertexSet& plus,
                            VertexSet& minus) {
  plus.clear();
  minus.clear();
  const auto r = order.rank[e];
  auto [u, v] = g.endpoints(e);
  if (g.degree(u) > g.degree(v)) std::swap(u, v);
  auto nu = g.neighbors(u), nv = g.neighbors(v);
  auto eu = g.incident_edges(u), ev = g.incident_edges(v);
  if (nv.size() > 8 * nu.size()) {
    for (std::size_t i = 0; i < nu.size(); ++i) {
      auto it = std::lower_bound(nv.begin(), nv.end(), nu[i]);
      if (it == nv.end() || *it != nu[i]) continue;
      const EdgeId b = ev[static_cast<std::size_t>(it - nv.begin())];
      (order.rank[eu[i]] > r && order.rank[b] > r ? plus : minus).push_back(nu[i]);
    }
    return;
  }
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nv[j] < nu[i]) {
      ++j;
    } else {
      (order.rank[eu[i]] > r && order.rank[ev[j]] > r ? plus : minus).push_back(nu[i]);
      ++i;
      ++j;
    }
  }
}

EdgeAux build_edge_aux(const Graph& g, const TrussEdgeOrder& order) {
  const auto m = g.edge_count();
  EdgeAux aux;
  aux.vplus.resize(m);
  aux.eplus.resize(m);
  aux.vminus.resize(m);
  aux.eminus.resize(m);
  auto by_rank = [&order](EdgeId a, EdgeId b) { return order.rank[a] < order.rank[b]; };

  VertexSet common;
  for (EdgeId e = 0; e < m; ++e) {
    auto& plus = aux.vplus[e];
    auto& minus = aux.vminus[e];
    split_common_neighbors(g, order, e, plus, minus);
    common.clear();
    std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(common));

    const auto r = order.rank[e];
    for (VertexId w : common) {
      auto nbrs = g.neighbors(w);
      auto eids = g.incident_edges(w);
      auto it = std::upper_bound(common.begin(), common.end(), w);
      for (std::size_t k = static_cast<std::size_t>(std::upper_bound(nbrs.begin(), nbrs.end(), w) - nbrs.begin());
           k < nbrs.size() && it != common.end();) {
        if (nbrs[k] < *it) {
          ++k;
        } else if (*it < nbrs[k]) {
          ++it;
        } else {
          const EdgeId f = eids[k];
          const bool inside_plus = std::binary_search(plus.begin(), plus.end(), w) &&
                                   std::binary_search(plus.begin(), plus.end(), nbrs[k]);
          (inside_plus && order.rank[f] > r ? aux.eplus[e] : aux.eminus[e]).push_back(f);
          ++k;
          ++it;
        }
      }
    }
    std::sort(aux.eplus[e].begin(), aux.eplus[e].end(), by_rank);
    std::sort(aux.eminus[e].begin(), aux.eminus[e].end(), by_rank);
  }
  return aux;
}

std::size_t zero_degree_terminate(const Graph& g, const EdgeBranch& b, CliqueSink& sink) {
  VertexSet touched;
  touched.reserve(b.candidate_edges.size() * 2);
  for (EdgeId e : b.candidate_edges) {
    touched.push_back(g.endpoints(e).u);
    touched.push_back(g.endpoints(e).v);
  }
  std::sort(touched.begin(), touched.end());

  std::size_t emitted = 0;
  VertexSet clique;
  for (VertexId w : b.candidates) {
    if (std::binary_search(touched.begin(), touched.end(), w)) continue;
    // S + {w} is maximal iff w has no G-neighbor among the other vertices of N(S, G).
    auto nbrs = g.neighbors(w);
    auto hits = [&nbrs](const VertexSet& side) {
      auto a = nbrs.begin();
      auto c = side.begin();
      while (a != nbrs.end() && c != side.end()) {
        if (*a < *c) {
          ++a;
        } else if (*c < *a) {
          ++c;
        } else {
          return true;
        }
      }
      return false;
    };
    if (hits(b.candidates) || hits(b.excluded)) continue;
    clique.assign(b.partial.begin(), b.partial.end());
    clique.push_back(w);
    sink.emit(clique);
    ++emitted;
  }
  return emitted;
}

namespace {

class EdgeEngine {
 public:
  EdgeEngine(const Graph& g, const TrussEdgeOrder& order, const EdgeAux& aux, CliqueSink& sink,
             const EngineOptions& options, RunStats& stats)
      : g_(g), order_(order), aux_(aux), sink_(sink), options_(options), stats_(stats), degree_(g.vertex_count(), 0) {}

  void run() {
    for (EdgeId e : order_.by_rank) {
      const auto [u, v] = g_.endpoints(e);
      EdgeBranch child;
      child.partial = {u, v};
      child.candidates = aux_.vplus[e];
      child.candidate_edges = aux_.eplus[e];
      child.excluded = aux_.vminus[e];
      stats_.max_level1_candidates = std::max(stats_.max_level1_candidates, child.candidates.size());
      recurse(child);
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (g_.degree(v) == 0) {
        const VertexId single[1] = {v};
        sink_.emit(single);
        ++stats_.zero_degree_emits;
      }
    }
  }

 private:
  bool by_rank(EdgeId a, EdgeId b) const { return order_.rank[a] < order_.rank[b]; }

  void recurse(const EdgeBranch& b) {
    ++stats_.recursive_calls;
    if (options_.check_invariants) check_branch(b);
    if (b.candidates.empty()) {
      if (b.excluded.empty()) sink_.emit(b.partial);
      return;
    }
    if (b.excluded.empty() && try_early_termination(b)) return;

    auto rank_less = [this](EdgeId x, EdgeId y) { return by_rank(x, y); };
    EdgeBranch child;
    for (EdgeId e : b.candidate_edges) {
      const auto [u, v] = g_.endpoints(e);
      const auto& plus = aux_.vplus[e];
      const auto& minus = aux_.vminus[e];

      child.partial = b.partial;
      child.partial.push_back(u);
      child.partial.push_back(v);

      child.candidates.clear();
      std::set_intersection(b.candidates.begin(), b.candidates.end(), plus.begin(), plus.end(),
                            std::back_inserter(child.candidates));
      child.candidate_edges.clear();
      std::set_intersection(b.candidate_edges.begin(), b.candidate_edges.end(), aux_.eplus[e].begin(),
                            aux_.eplus[e].end(), std::back_inserter(child.candidate_edges), rank_less);

      // Exclusion: old exclusion vertices still adjacent to u and v, plus
      // candidates adjacent to u and v that fail the rank filter.
      VertexSet side;
      std::set_union(b.candidates.begin(), b.candidates.end(), b.excluded.begin(), b.excluded.end(),
                     std::back_inserter(side));
      VertexSet from_minus, kept;
      std::set_intersection(side.begin(), side.end(), minus.begin(), minus.end(), std::back_inserter(from_minus));
      std::set_intersection(b.excluded.begin(), b.excluded.end(), plus.begin(), plus.end(),
                            std::back_inserter(kept));
      child.excluded.clear();
      std::set_union(from_minus.begin(), from_minus.end(), kept.begin(), kept.end(),
                     std::back_inserter(child.excluded));

      recurse(child);
    }
    stats_.zero_degree_emits += zero_degree_terminate(g_, b, sink_);
  }

  bool try_early_termination(const EdgeBranch& b) {
    const auto& cand = b.candidates;
    for (EdgeId e : b.candidate_edges) {
      ++degree_[g_.endpoints(e).u];
      ++degree_[g_.endpoints(e).v];
    }
    std::size_t min_degree = cand.size();
    for (VertexId v : cand) min_degree = std::min<std::size_t>(min_degree, degree_[v]);
    for (EdgeId e : b.candidate_edges) {
      degree_[g_.endpoints(e).u] = 0;
      degree_[g_.endpoints(e).v] = 0;
    }
    if (cand.size() - min_degree > static_cast<std::size_t>(early_term::kMaxPlex)) return false;

    const auto t = early_term::detect_plex(cand.size(), min_degree, true, b.candidate_edges.size(),
                                           induced_edge_count(g_, cand));
    if (!t) return false;
    ++stats_.et_eligible_branches;
    for (int k = *t; k <= early_term::kMaxPlex; ++k) ++stats_.eligible_by_t[static_cast<std::size_t>(k - 1)];
    if (*t > options_.et_threshold) return false;
    ++stats_.et_fired_branches;

    // Ghost-free, so candidate adjacency equals G adjacency on the candidates.
    std::vector<early_term::ComplementLinks> links(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g_.adjacent(cand[i], cand[j])) continue;
        for (auto [a, z] : {std::pair{i, j}, std::pair{j, i}}) {
          auto& link = links[a];
          if (link.count < link.to.size()) link.to[link.count] = static_cast<std::uint32_t>(z);
          ++link.count;
        }
      }
    }
    const auto plex = early_term::decompose(cand, links, *t);
    if (options_.on_early_termination) {
      std::vector<Edge> edges;
      for (EdgeId e : b.candidate_edges) edges.push_back(g_.endpoints(e));
      options_.on_early_termination({b.partial, cand, edges, *t});
    }
    early_term::enumerate(b.partial, plex, sink_);
    return true;
  }

  void check_branch(const EdgeBranch& b) const {
    if (b.partial.size() % 2 != 0) throw std::logic_error("edge branch with odd partial clique");
    if (!is_clique(g_, b.partial)) throw std::logic_error("partial set is not a clique");
    VertexSet side;
    std::set_union(b.candidates.begin(), b.candidates.end(), b.excluded.begin(), b.excluded.end(),
                   std::back_inserter(side));
    if (side.size() != b.candidates.size() + b.excluded.size()) {
      throw std::logic_error("candidate and exclusion sets overlap");
    }
    VertexSet sorted_partial = b.partial;
    std::sort(sorted_partial.begin(), sorted_partial.end());
    if (side != common_neighborhood(g_, sorted_partial)) {
      throw std::logic_error("candidates + exclusion differ from the common neighborhood");
    }
    for (EdgeId e : b.candidate_edges) {
      const auto [u, v] = g_.endpoints(e);
      if (!std::binary_search(b.candidates.begin(), b.candidates.end(), u) ||
          !std::binary_search(b.candidates.begin(), b.candidates.end(), v)) {
        throw std::logic_error("candidate edge leaves the candidate set");
      }
    }
  }

  const Graph& g_;
  const TrussEdgeOrder& order_;
  const EdgeAux& aux_;
  CliqueSink& sink_;
  const EngineOptions& options_;
  RunStats& stats_;
  std::vector<std::uint32_t> degree_;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RunStats ebbmc_enumerate(const Graph& g, CliqueSink& sink, const EngineOptions& options) {
  validate(options);
  RunStats stats;
  auto t0 = std::chrono::steady_clock::now();
  const auto order = truss_edge_order(g);
  const auto aux = build_edge_aux(g, order);
  stats.ordering_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  EdgeEngine engine(g, order, aux, sink, options, stats);
  engine.run();
  stats.enumeration_ms = ms_since(t0);
  return stats;
}

}  // namespace mce
