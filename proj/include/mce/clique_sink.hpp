#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

enum class SinkMode { count, list, digest };

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Order-sensitive hash of an ascending vertex list:
///   h = mix64(size); for each v: h = mix64(h + v + 0x9e3779b97f4a7c15)
std::uint64_t clique_hash(std::span<const VertexId> ascending) noexcept;

/// Receives maximal cliques from an engine. Every mode tracks the count and
/// the order-independent digest (wrapping sum of clique_hash); list mode also
/// keeps each clique with its vertices ascending.
class CliqueSink {
 public:
  explicit CliqueSink(SinkMode mode = SinkMode::count) : mode_(mode) {}

  /// The clique may arrive in any vertex order.
  void emit(std::span<const VertexId> clique);

  SinkMode mode() const noexcept { return mode_; }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t digest() const noexcept { return digest_; }
  const std::vector<VertexSet>& cliques() const noexcept { return cliques_; }

 private:
  SinkMode mode_;
  std::uint64_t count_ = 0;
  std::uint64_t digest_ = 0;
  VertexSet scratch_;
  std::vector<VertexSet> cliques_;
};

/// Digest of a clique list, computed the same way the sink does.
std::uint64_t digest_of(const std::vector<VertexSet>& cliques);

}  // namespace mce
