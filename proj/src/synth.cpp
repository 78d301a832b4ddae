#include "mce/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "mce/clique_sink.hpp"

namespace mce::synth {

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  using u128 = unsigned __int128;
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

namespace {

// Decodes the index of (u, v), u < v, in lexicographic pair order.
Edge decode_pair(std::uint64_t index, std::uint64_t n) {
  auto offset = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
  std::uint64_t lo = 0, hi = n - 1;
  while (lo + 1 < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    if (offset(mid) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t u = offset(hi) <= index && hi < n - 1 ? hi : lo;
  const std::uint64_t v = u + 1 + (index - offset(u));
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

Graph gen_er(const GenSpec& spec) {
  if (spec.n < 1) throw ParameterError("ER generator needs n >= 1");
  if (!(spec.rho >= 0.0)) throw ParameterError("ER generator needs rho >= 0");
  const std::uint64_t n = spec.n;
  const std::uint64_t pairs = n * (n - 1) / 2;
  const double target = std::round(static_cast<double>(n) * spec.rho);
  if (target > static_cast<double>(pairs)) {
    throw ParameterError("ER generator: n * rho exceeds n(n-1)/2");
  }
  const auto m = static_cast<std::uint64_t>(target);

  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  std::vector<std::uint64_t> picked;
  picked.reserve(m);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t take = chosen.insert(t).second ? t : j;
    if (take == j) chosen.insert(j);
    picked.push_back(take);
  }
  std::sort(picked.begin(), picked.end());

  std::vector<Edge> edges;
  edges.reserve(m);
  for (auto index : picked) edges.push_back(decode_pair(index, n));
  return Graph::from_edges(spec.n, edges);
}

Graph gen_ba(const GenSpec& spec) {
  if (!(spec.rho >= 0.0)) throw ParameterError("BA generator needs rho >= 0");
  const auto k = static_cast<std::uint64_t>(std::llround(spec.rho));
  if (k < 1) throw ParameterError("BA generator needs round(rho) >= 1");
  if (spec.n <= k) throw ParameterError("BA generator needs n > round(rho)");

  SplitMix64 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve((k + 1) * k / 2 + (spec.n - k - 1) * k);
  // Every edge endpoint once, so a uniform draw is degree-proportional.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (VertexId u = 0; u <= k; ++u) {
    for (VertexId v = u + 1; v <= k; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<VertexId> targets;
  for (auto v = static_cast<VertexId>(k + 1); v < spec.n; ++v) {
    targets.clear();
    while (targets.size() < k) {
      const VertexId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (VertexId t : targets) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(spec.n, edges);
}

Graph generate(const GenSpec& spec) { return spec.model == Model::er ? gen_er(spec) : gen_ba(spec); }

GenSpec parse_gen_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("generator spec must look like er:n=...,rho=...");
  GenSpec spec;
  const auto model = text.substr(0, colon);
  if (model == "er") {
    spec.model = Model::er;
  } else if (model == "ba") {
    spec.model = Model::ba;
  } else {
    throw ParameterError("unknown generator model '" + model + "'");
  }

  bool have_n = false, have_rho = false;
  std::stringstream fields(text.substr(colon + 1));
  std::string field;
  while (std::getline(fields, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParameterError("malformed generator field '" + field + "'");
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    try {
      std::size_t used = 0;
      if (key == "n") {
        const auto n = std::stoull(value, &used);
        if (n > 0xffffffffULL) throw ParameterError("n too large");
        spec.n = static_cast<std::uint32_t>(n);
        have_n = true;
      } else if (key == "rho") {
        spec.rho = std::stod(value, &used);
        have_rho = true;
      } else if (key == "seed") {
        spec.seed = std::stoull(value, &used);
      } else {
        throw ParameterError("unknown generator field '" + key + "'");
      }
      if (used != value.size()) throw ParameterError("malformed value in '" + field + "'");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ParameterError*>(&e) != nullptr) throw;
      throw ParameterError("malformed value in '" + field + "'");
    }
  }
  if (!have_n || !have_rho) throw ParameterError("generator spec needs n and rho");
  return spec;
}

std::string to_string(const GenSpec& spec) {
  std::ostringstream out;
  out << (spec.model == Model::er ? "er" : "ba") << ":n=" << spec.n << ",rho=" << spec.rho << ",seed=" << spec.seed;
  return out.str();
}

}  // namespace mce::synth
