#include "mce/clique_sink.hpp"

#include <algorithm>

namespace mce {

std::uint64_t clique_hash(std::span<const VertexId> ascending) noexcept {
  std::uint64_t h = mix64(ascending.size());
  for (VertexId v : ascending) h = mix64(h + v + 0x9e3779b97f4a7c15ULL);
  return h;
}

void CliqueSink::emit(std::span<const VertexId> clique) {
  scratch_.assign(clique.begin(), clique.end());
  std::sort(scratch_.begin(), scratch_.end());
  ++count_;
  digest_ += clique_hash(scratch_);
  if (mode_ == SinkMode::list) cliques_.push_back(scratch_);
}

std::uint64_t digest_of(const std::vector<VertexSet>& cliques) {
  std::uint64_t d = 0;
  VertexSet tmp;
  for (const auto& c : cliques) {
    tmp = c;
    std::sort(tmp.begin(), tmp.end());
    d += clique_hash(tmp);
  }
  return d;
}

}  // namespace mce
