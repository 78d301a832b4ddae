#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mce/graph.hpp"

namespace mce::synth {

/// SplitMix64: state += 0x9e3779b97f4a7c15, output = mix64(state).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) by 128-bit multiply with rejection
  /// (Lemire); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

enum class Model { er, ba };

struct GenSpec {
  Model model = Model::er;
  std::uint32_t n = 0;
  double rho = 0.0;  // target m / n
  std::uint64_t seed = 0;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exactly round(n * rho) distinct edges sampled uniformly without
/// replacement from all vertex pairs (Floyd's subset sampling over pair
/// indices).
Graph gen_er(const GenSpec& spec);

/// Preferential attachment with k = round(rho): a (k+1)-clique seed, then
/// every new vertex links to k distinct earlier vertices drawn with
/// probability proportional to degree; repeated draws are resampled.
/// m = C(k+1, 2) + (n - k - 1) * k.
Graph gen_ba(const GenSpec& spec);

Graph generate(const GenSpec& spec);

/// Parses "er:n=1000,rho=5,seed=3" (keys in any order; seed defaults to 0).
GenSpec parse_gen_spec(const std::string& text);
std::string to_string(const GenSpec& spec);

}  // namespace mce::synth
