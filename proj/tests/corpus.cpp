#include "corpus.hpp"

#include <cmath>

#include "mce/synth.hpp"

namespace corpus {

using mce::Edge;
using mce::Graph;
using mce::VertexId;

Graph make(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph::from_edges(n, list);
}

Graph complete(VertexId n) {
  std::vector<Edge> list;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) list.push_back({u, v});
  return Graph::from_edges(n, list);
}

Graph path(VertexId n) {
  std::vector<Edge> list;
  for (VertexId v = 1; v < n; ++v) list.push_back({v - 1, v});
  return Graph::from_edges(n, list);
}

Graph cycle(VertexId n) {
  std::vector<Edge> list;
  for (VertexId v = 0; v < n; ++v) list.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, list);
}

Graph star(VertexId leaves) {
  std::vector<Edge> list;
  for (VertexId v = 1; v <= leaves; ++v) list.push_back({0, v});
  return Graph::from_edges(leaves + 1, list);
}

Graph complete_bipartite(VertexId p, VertexId q) {
  std::vector<Edge> list;
  for (VertexId u = 0; u < p; ++u)
    for (VertexId v = 0; v < q; ++v) list.push_back({u, p + v});
  return Graph::from_edges(p + q, list);
}

Graph moon_moser(VertexId n) {
  std::vector<Edge> list;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (u / 3 != v / 3) list.push_back({u, v});
  return Graph::from_edges(n, list);
}

Graph petersen() {
  return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph empty(VertexId n) { return Graph::from_edges(n, {}); }

Graph er_p(VertexId n, double p, std::uint64_t seed) {
  return mce::synth::gen_er({mce::synth::Model::er, n, p * (n - 1) / 2.0, seed});
}

const std::vector<Named>& graphs() {
  static const std::vector<Named> all = [] {
    std::vector<Named> g{
        {"k1", complete(1)},
        {"k2", complete(2)},
        {"k3", complete(3)},
        {"k4", complete(4)},
        {"k5", complete(5)},
        {"k8", complete(8)},
        {"p3", path(3)},
        {"p6", path(6)},
        {"c4", cycle(4)},
        {"c5", cycle(5)},
        {"c9", cycle(9)},
        {"star4", star(4)},
        {"k33", complete_bipartite(3, 3)},
        {"k45", complete_bipartite(4, 5)},
        {"mm9", moon_moser(9)},
        {"mm15", moon_moser(15)},
        {"petersen", petersen()},
        {"empty5", empty(5)},
        {"isolated_plus_edge", make(3, {{1, 2}})},
        {"two_triangles", make(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}})},
    };
    // K6 minus a perfect matching.
    g.push_back({"k6_minus_matching", make(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                               {2, 4}, {2, 5}, {3, 4}, {3, 5}})});
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const VertexId n = 20 + static_cast<VertexId>(seed) * 15;
      for (double rho : {1.5, 4.0, 8.0}) {
        g.push_back({"er:n=" + std::to_string(n) + ",rho=" + std::to_string(rho) + ",seed=" + std::to_string(seed),
                     mce::synth::gen_er({mce::synth::Model::er, n, rho, seed})});
      }
      for (double rho : {2.0, 5.0}) {
        g.push_back({"ba:n=" + std::to_string(n) + ",rho=" + std::to_string(rho) + ",seed=" + std::to_string(seed),
                     mce::synth::gen_ba({mce::synth::Model::ba, n, rho, seed})});
      }
    }
    // Without the rank filter the hybrid engine repeats a clique here.
    g.push_back({"er:n=40,rho=8,seed=19", mce::synth::gen_er({mce::synth::Model::er, 40, 8.0, 19})});
    // Dense graphs where early termination fires often.
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      g.push_back({"dense_er_" + std::to_string(seed), er_p(30, 0.85, seed)});
    }
    return g;
  }();
  return all;
}

std::vector<Named> small_er(std::size_t count) {
  std::vector<Named> out;
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<VertexId>(4 + i % 11);
    const double p = ps[(i / 11) % 3];
    const std::uint64_t seed = 1000 + i;
    out.push_back({"er_p:n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",seed=" + std::to_string(seed),
                   er_p(n, p, seed)});
  }
  return out;
}

}  // namespace corpus
