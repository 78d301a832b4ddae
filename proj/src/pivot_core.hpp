#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/engine.hpp"
#include "mce/graph.hpp"

namespace mce::detail {

/// Pivot-based vertex recursion over one branch, shared by the vertex and
/// hybrid engines.
///
/// The branch is copied into a local dense form: candidates get local ids
/// 0..c-1 (ascending global id), exclusion vertices c..c+x-1. Every local
/// vertex keeps a bit row of its G-neighbors among the candidates; candidates
/// additionally keep a row of their admitted candidate edges, which differs
/// from the G row only when a rank floor filters edges. Per-depth buffers are
/// reused across branches.
class PivotCore {
 public:
  PivotCore(const Graph& g, CliqueSink& sink, const EngineOptions& options, RunStats& stats);

  /// Enumerates every maximal clique of G extending `partial` by candidates,
  /// with candidate edges restricted to those ranked above `rank_floor` when
  /// `rank` is given. Requires candidates + excluded = N(partial, G).
  void run(std::span<const VertexId> partial, std::span<const VertexId> candidates,
           std::span<const VertexId> excluded, const std::vector<std::uint32_t>* rank = nullptr,
           std::uint32_t rank_floor = 0);

 private:
  using Word = std::uint64_t;

  Word* g_row(std::size_t i) { return g_rows_.data() + i * words_; }
  Word* cand_row(std::size_t i) { return filtered_ ? f_rows_.data() + i * words_ : g_row(i); }
  Word* p_row(std::size_t d) { return p_.data() + d * words_; }
  Word* xin_row(std::size_t d) { return xin_.data() + d * words_; }
  Word* branch_row(std::size_t d) { return branch_.data() + d * words_; }

  void load(std::span<const VertexId> candidates, std::span<const VertexId> excluded,
            const std::vector<std::uint32_t>* rank, std::uint32_t rank_floor);
  void recurse(std::size_t depth);
  void terminate_early(std::size_t depth, int t);
  void check_branch(std::size_t depth);

  const Graph& g_;
  CliqueSink& sink_;
  const EngineOptions& options_;
  RunStats& stats_;

  std::vector<std::int32_t> local_of_;
  std::vector<VertexId> global_;
  std::size_t c_ = 0;
  std::size_t x_ = 0;
  std::size_t words_ = 0;
  bool filtered_ = false;

  std::vector<Word> g_rows_;
  std::vector<Word> f_rows_;
  std::vector<Word> p_;
  std::vector<Word> xin_;
  std::vector<Word> branch_;
  std::vector<std::vector<std::uint32_t>> xout_;
  VertexSet partial_;

  // Early-termination scratch.
  VertexSet et_vertices_;
  std::vector<std::uint32_t> et_index_;
};

}  // namespace mce::detail
