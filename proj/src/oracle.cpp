#include "mce/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>

namespace mce::oracle {

void canonicalize(std::vector<VertexSet>& cliques) {
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
}

std::vector<VertexSet> exhaustive_mce(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > kExhaustiveLimit) throw std::length_error("exhaustive enumeration is limited to 20 vertices");
  std::vector<VertexSet> out;
  if (n == 0) return out;

  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  const std::size_t subsets = std::size_t{1} << n;
  // common[s]: vertices adjacent to every member of s; clique[s] by extension
  // of s minus its lowest member.
  std::vector<std::uint32_t> common(subsets);
  std::vector<bool> clique(subsets);
  common[0] = all;
  clique[0] = true;
  for (std::size_t s = 1; s < subsets; ++s) {
    const auto low = static_cast<unsigned>(std::countr_zero(s));
    const std::size_t rest = s & (s - 1);
    common[s] = common[rest] & adj[low];
    clique[s] = clique[rest] && (adj[low] & rest) == rest;
    if (clique[s] && common[s] == 0) {
      VertexSet members;
      for (std::size_t bits = s; bits != 0; bits &= bits - 1) {
        members.push_back(static_cast<VertexId>(std::countr_zero(bits)));
      }
      out.push_back(std::move(members));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void bk_pivot(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  auto inter_size = [&g](VertexId u, const VertexSet& s) {
    auto nbrs = g.neighbors(u);
    std::size_t k = 0;
    auto a = nbrs.begin();
    auto b = s.begin();
    while (a != nbrs.end() && b != s.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++k;
        ++a;
        ++b;
      }
    }
    return k;
  };
  VertexId pivot = p.front();
  std::size_t best = 0;
  bool first = true;
  for (const auto* side : {&p, &x}) {
    for (VertexId u : *side) {
      const auto k = inter_size(u, p);
      if (first || k > best) {
        pivot = u;
        best = k;
        first = false;
      }
    }
  }
  VertexSet branch;
  auto pn = g.neighbors(pivot);
  std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(branch));
  for (VertexId v : branch) {
    auto vn = g.neighbors(v);
    VertexSet np, nx;
    std::set_intersection(p.begin(), p.end(), vn.begin(), vn.end(), std::back_inserter(np));
    std::set_intersection(x.begin(), x.end(), vn.begin(), vn.end(), std::back_inserter(nx));
    r.push_back(v);
    bk_pivot(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<VertexSet> reference_bk(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  VertexSet r;
  VertexSet p(g.vertex_count());
  for (VertexId v = 0; v < p.size(); ++v) p[v] = v;
  bk_pivot(g, r, std::move(p), {}, out);
  canonicalize(out);
  return out;
}

}  // namespace mce::oracle
