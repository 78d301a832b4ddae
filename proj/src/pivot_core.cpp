#include "pivot_core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mce/early_term.hpp"

namespace mce::detail {

namespace {

using Word = std::uint64_t;

inline void set_bit(Word* row, std::size_t i) { row[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(Word* row, std::size_t i) { row[i >> 6] &= ~(Word{1} << (i & 63)); }
inline bool test_bit(const Word* row, std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1U; }

inline std::size_t popcount_and(const Word* a, const Word* b, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < words; ++k) n += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
  return n;
}

inline bool none(const Word* a, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) {
    if (a[k] != 0) return false;
  }
  return true;
}

template <class F>
inline void for_each_bit(const Word* row, std::size_t words, F&& f) {
  for (std::size_t k = 0; k < words; ++k) {
    Word w = row[k];
    while (w != 0) {
      f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

}  // namespace

PivotCore::PivotCore(const Graph& g, CliqueSink& sink, const EngineOptions& options, RunStats& stats)
    : g_(g), sink_(sink), options_(options), stats_(stats), local_of_(g.vertex_count(), -1) {}

void PivotCore::load(std::span<const VertexId> candidates, std::span<const VertexId> excluded,
                     const std::vector<std::uint32_t>* rank, std::uint32_t rank_floor) {
  c_ = candidates.size();
  x_ = excluded.size();
  words_ = (c_ + 63) / 64;
  filtered_ = rank != nullptr;

  global_.assign(candidates.begin(), candidates.end());
  global_.insert(global_.end(), excluded.begin(), excluded.end());
  for (std::size_t i = 0; i < global_.size(); ++i) local_of_[global_[i]] = static_cast<std::int32_t>(i);

  g_rows_.assign((c_ + x_) * words_, 0);
  if (filtered_) f_rows_.assign(c_ * words_, 0);

  auto record = [&](std::size_t i, std::size_t j, EdgeId e) {
    if (j < c_) {
      set_bit(g_row(i), j);
      if (filtered_ && (*rank)[e] > rank_floor) set_bit(f_rows_.data() + i * words_, j);
    } else {
      set_bit(g_row(j), i);
    }
  };

  const std::size_t local_count = c_ + x_;
  for (std::size_t i = 0; i < c_; ++i) {
    const VertexId w = global_[i];
    if (g_.degree(w) <= 4 * local_count) {
      auto nbrs = g_.neighbors(w);
      auto eids = g_.incident_edges(w);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const auto j = local_of_[nbrs[k]];
        if (j >= 0) record(i, static_cast<std::size_t>(j), eids[k]);
      }
    } else {
      // Hub candidate: probe the few local vertices instead of its adjacency.
      for (std::size_t j = 0; j < local_count; ++j) {
        if (j == i) continue;
        const auto e = g_.find_edge(w, global_[j]);
        if (e >= 0) record(i, j, static_cast<EdgeId>(e));
      }
    }
  }
  for (VertexId v : global_) local_of_[v] = -1;

  const std::size_t levels = c_ + 1;
  p_.assign(levels * words_, 0);
  xin_.assign(levels * words_, 0);
  branch_.assign(levels * words_, 0);
  if (xout_.size() < levels) xout_.resize(levels);
  for (std::size_t d = 0; d < levels; ++d) xout_[d].clear();
}

void PivotCore::run(std::span<const VertexId> partial, std::span<const VertexId> candidates,
                    std::span<const VertexId> excluded, const std::vector<std::uint32_t>* rank,
                    std::uint32_t rank_floor) {
  load(candidates, excluded, rank, rank_floor);
  for (std::size_t i = 0; i < c_; ++i) set_bit(p_row(0), i);
  for (std::size_t j = c_; j < c_ + x_; ++j) xout_[0].push_back(static_cast<std::uint32_t>(j));
  partial_.assign(partial.begin(), partial.end());
  recurse(0);
}

void PivotCore::recurse(std::size_t depth) {
  ++stats_.recursive_calls;
  if (options_.check_invariants) check_branch(depth);

  Word* p = p_row(depth);
  Word* xin = xin_row(depth);
  auto& xout = xout_[depth];
  const bool x_empty = xout.empty() && none(xin, words_);

  std::size_t p_count = 0;
  for (std::size_t k = 0; k < words_; ++k) p_count += static_cast<std::size_t>(std::popcount(p[k]));
  if (p_count == 0) {
    if (x_empty) sink_.emit(partial_);
    return;
  }

  // Pivot scan over the candidates; the minimum degree feeds the plex test.
  std::size_t best = 0, best_count = 0, min_degree = p_count, degree_sum = 0;
  bool have_best = false;
  auto consider = [&](std::size_t local, std::size_t count) {
    if (!have_best || count > best_count || (count == best_count && global_[local] < global_[best])) {
      best = local;
      best_count = count;
      have_best = true;
    }
  };
  for_each_bit(p, words_, [&](std::size_t v) {
    const auto cnt = popcount_and(cand_row(v), p, words_);
    min_degree = std::min(min_degree, cnt);
    degree_sum += cnt;
    consider(v, cnt);
  });

  if (x_empty) {
    const std::size_t cand_edges = degree_sum / 2;
    std::size_t induced = cand_edges;
    if (filtered_ && p_count - min_degree <= static_cast<std::size_t>(early_term::kMaxPlex)) {
      std::size_t g_sum = 0;
      for_each_bit(p, words_, [&](std::size_t v) { g_sum += popcount_and(g_row(v), p, words_); });
      induced = g_sum / 2;
    }
    if (auto t = early_term::detect_plex(p_count, min_degree, true, cand_edges, induced)) {
      ++stats_.et_eligible_branches;
      for (int k = *t; k <= early_term::kMaxPlex; ++k) ++stats_.eligible_by_t[static_cast<std::size_t>(k - 1)];
      if (*t <= options_.et_threshold) {
        ++stats_.et_fired_branches;
        terminate_early(depth, *t);
        return;
      }
    }
  }

  for_each_bit(xin, words_, [&](std::size_t v) { consider(v, popcount_and(g_row(v), p, words_)); });
  for (auto v : xout) consider(v, popcount_and(g_row(v), p, words_));

  const Word* pivot_row = best < c_ && !test_bit(xin, best) ? cand_row(best) : g_row(best);
  Word* to_branch = branch_row(depth);
  for (std::size_t k = 0; k < words_; ++k) to_branch[k] = p[k] & ~pivot_row[k];

  Word* next_p = p_row(depth + 1);
  Word* next_xin = xin_row(depth + 1);
  auto& next_xout = xout_[depth + 1];
  for_each_bit(to_branch, words_, [&](std::size_t w) {
    const Word* cand = cand_row(w);
    const Word* grow = g_row(w);
    for (std::size_t k = 0; k < words_; ++k) {
      next_p[k] = p[k] & cand[k];
      // G-neighbors that lost their candidate edge migrate to the exclusion side.
      next_xin[k] = (xin[k] & grow[k]) | (p[k] & grow[k] & ~cand[k]);
    }
    next_xout.clear();
    for (auto v : xout) {
      if (test_bit(g_row(v), w)) next_xout.push_back(v);
    }
    partial_.push_back(global_[w]);
    recurse(depth + 1);
    partial_.pop_back();
    clear_bit(p, w);
    set_bit(xin, w);
  });
}

void PivotCore::terminate_early(std::size_t depth, int t) {
  const Word* p = p_row(depth);
  et_vertices_.clear();
  et_index_.assign(c_, 0);
  for_each_bit(p, words_, [&](std::size_t v) {
    et_index_[v] = static_cast<std::uint32_t>(et_vertices_.size());
    et_vertices_.push_back(global_[v]);
  });

  std::vector<early_term::ComplementLinks> links(et_vertices_.size());
  std::vector<Word> missing(words_);
  std::size_t idx = 0;
  for_each_bit(p, words_, [&](std::size_t v) {
    const Word* row = cand_row(v);
    for (std::size_t k = 0; k < words_; ++k) missing[k] = p[k] & ~row[k];
    clear_bit(missing.data(), v);
    auto& link = links[idx++];
    for_each_bit(missing.data(), words_, [&](std::size_t u) {
      if (link.count < link.to.size()) link.to[link.count] = et_index_[u];
      ++link.count;
    });
  });

  const auto plex = early_term::decompose(et_vertices_, links, t);
  if (options_.on_early_termination) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < et_vertices_.size(); ++a) {
      for (std::size_t b = a + 1; b < et_vertices_.size(); ++b) {
        bool non_adjacent = false;
        for (std::uint32_t k = 0; k < links[a].count; ++k) non_adjacent |= links[a].to[k] == b;
        if (!non_adjacent) edges.push_back({et_vertices_[a], et_vertices_[b]});
      }
    }
    options_.on_early_termination({partial_, et_vertices_, edges, t});
  }
  early_term::enumerate(partial_, plex, sink_);
}

void PivotCore::check_branch(std::size_t depth) {
  if (!is_clique(g_, partial_)) throw std::logic_error("partial set is not a clique");
  const Word* p = p_row(depth);
  const Word* xin = xin_row(depth);
  VertexSet side;
  for_each_bit(p, words_, [&](std::size_t v) {
    if (test_bit(xin, v)) throw std::logic_error("vertex in both candidate and exclusion sets");
    side.push_back(global_[v]);
  });
  for_each_bit(xin, words_, [&](std::size_t v) { side.push_back(global_[v]); });
  for (auto v : xout_[depth]) side.push_back(global_[v]);
  std::sort(side.begin(), side.end());
  if (std::adjacent_find(side.begin(), side.end()) != side.end()) {
    throw std::logic_error("duplicate vertex in branch state");
  }
  if (!partial_.empty()) {
    VertexSet sorted_partial = partial_;
    std::sort(sorted_partial.begin(), sorted_partial.end());
    if (side != common_neighborhood(g_, sorted_partial)) {
      throw std::logic_error("candidates + exclusion differ from the common neighborhood");
    }
  }
}

}  // namespace mce::detail
