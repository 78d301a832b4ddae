#include "mce/orderings.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace mce {

namespace {

// Bucket queue over integer keys with smallest-id tie-break. A bucket holds
// its initial ids as an ascending run plus a min-heap of ids that moved in
// later; entries whose key has since changed are discarded lazily on pop.
class BucketQueue {
 public:
  explicit BucketQueue(const std::vector<std::uint32_t>& keys) : key_(keys), dead_(keys.size(), false) {
    std::uint32_t max_key = 0;
    for (auto k : keys) max_key = std::max(max_key, k);
    buckets_.resize(static_cast<std::size_t>(max_key) + 1);
    for (std::uint32_t id = 0; id < keys.size(); ++id) buckets_[keys[id]].run.push_back(id);
    live_ = keys.size();
  }

  bool empty() const { return live_ == 0; }

  std::uint32_t key(std::uint32_t id) const { return key_[id]; }
  bool removed(std::uint32_t id) const { return dead_[id]; }

  std::uint32_t pop_min() {
    for (;;) {
      auto& b = buckets_[cursor_];
      const bool has_run = b.head < b.run.size();
      if (!has_run && b.heap.empty()) {
        ++cursor_;
        continue;
      }
      std::uint32_t id;
      if (has_run && (b.heap.empty() || b.run[b.head] < b.heap.front())) {
        id = b.run[b.head++];
      } else {
        std::pop_heap(b.heap.begin(), b.heap.end(), std::greater<>());
        id = b.heap.back();
        b.heap.pop_back();
      }
      if (dead_[id] || key_[id] != cursor_) continue;
      dead_[id] = true;
      --live_;
      return id;
    }
  }

  void decrement(std::uint32_t id) {
    std::uint32_t k = --key_[id];
    auto& heap = buckets_[k].heap;
    heap.push_back(id);
    std::push_heap(heap.begin(), heap.end(), std::greater<>());
    cursor_ = std::min(cursor_, k);
  }

 private:
  struct Bucket {
    std::vector<std::uint32_t> run;
    std::size_t head = 0;
    std::vector<std::uint32_t> heap;
  };

  std::vector<std::uint32_t> key_;
  std::vector<bool> dead_;
  std::vector<Bucket> buckets_;
  std::uint32_t cursor_ = 0;
  std::size_t live_ = 0;
};

}  // namespace

DegeneracyOrder degeneracy_order(const Graph& g) {
  const auto n = g.vertex_count();
  DegeneracyOrder out;
  out.order.reserve(n);
  out.position.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::uint32_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = static_cast<std::uint32_t>(g.degree(v));
  BucketQueue queue(degree);
  while (!queue.empty()) {
    VertexId v = queue.pop_min();
    out.degeneracy = std::max(out.degeneracy, queue.key(v));
    out.position[v] = static_cast<std::uint32_t>(out.order.size());
    out.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      if (!queue.removed(w)) queue.decrement(w);
    }
  }
  return out;
}

TrussEdgeOrder truss_edge_order(const Graph& g) {
  const auto m = g.edge_count();
  TrussEdgeOrder out;
  out.rank.assign(m, 0);
  out.by_rank.reserve(m);
  out.support_at_removal.assign(m, 0);
  if (m == 0) return out;

  // Initial supports by oriented triangle listing: each edge points from the
  // endpoint of lower (degree, id) to the higher one.
  const auto n = g.vertex_count();
  auto before = [&g](VertexId a, VertexId b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  };
  std::vector<std::uint32_t> support(m, 0);
  std::vector<std::int64_t> mark(n, -1);
  for (VertexId u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto eu = g.incident_edges(u);
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (before(u, nu[i])) mark[nu[i]] = eu[i];
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const VertexId v = nu[i];
      if (!before(u, v)) continue;
      auto nv = g.neighbors(v);
      auto ev = g.incident_edges(v);
      for (std::size_t j = 0; j < nv.size(); ++j) {
        const VertexId w = nv[j];
        if (mark[w] < 0 || !before(v, w)) continue;
        ++support[eu[i]];
        ++support[ev[j]];
        ++support[static_cast<EdgeId>(mark[w])];
      }
    }
    for (VertexId v : nu) mark[v] = -1;
  }

  out.support = support;
  BucketQueue queue(support);
  while (!queue.empty()) {
    EdgeId e = queue.pop_min();
    const std::uint32_t s = queue.key(e);
    out.support_at_removal[e] = s;
    out.tau = std::max(out.tau, s);
    out.rank[e] = static_cast<std::uint32_t>(out.by_rank.size());
    out.by_rank.push_back(e);

    // Every triangle through e that is still alive loses e.
    // The residual support is the number of live triangles through e; stop
    // scanning once all of them have been seen.
    std::uint32_t left = s;
    auto [u, v] = g.endpoints(e);
    if (g.degree(u) > g.degree(v)) std::swap(u, v);
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    auto eu = g.incident_edges(u), ev = g.incident_edges(v);
    for (std::size_t i = 0; i < nu.size() && left > 0; ++i) {
      const EdgeId a = eu[i];
      if (queue.removed(a)) continue;
      auto it = std::lower_bound(nv.begin(), nv.end(), nu[i]);
      if (it == nv.end() || *it != nu[i]) continue;
      const EdgeId b = ev[static_cast<std::size_t>(it - nv.begin())];
      if (queue.removed(b)) continue;
      queue.decrement(a);
      queue.decrement(b);
      --left;
    }
  }
  return out;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints(e);
    // Count each triangle at its edge (u, v) with the largest third vertex w > v.
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    auto i = std::upper_bound(nu.begin(), nu.end(), v);
    auto j = std::upper_bound(nv.begin(), nv.end(), v);
    while (i != nu.end() && j != nv.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
  }
  return count;
}

bool hybrid_condition(std::uint32_t delta, std::uint32_t tau, double rho) {
  if (delta < 3) return false;
  if (!(rho > 0.0)) return true;  // ln(rho) -> -inf, only the constant 3 binds
  return static_cast<double>(delta) >= static_cast<double>(tau) + 3.0 * std::log(rho) / std::log(3.0);
}

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  if (s.n == 0) return s;
  s.delta = degeneracy_order(g).degeneracy;
  s.tau = truss_edge_order(g).tau;
  s.rho = static_cast<double>(s.m) / static_cast<double>(s.n);
  s.condition = hybrid_condition(s.delta, s.tau, s.rho);
  return s;
}

}  // namespace mce
