#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "mce/graph.hpp"
#include "mce/synth.hpp"

using namespace mce;

namespace {

LoadedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace

TEST_CASE("loader: path on three vertices") {
  auto lg = parse("0 1\n1 2\n");
  CHECK(lg.graph.vertex_count() == 3);
  CHECK(lg.graph.edge_count() == 2);
}

TEST_CASE("loader: drops self-loops and duplicates") {
  auto lg = parse("0 0\n0 1\n1 0\n");
  CHECK(lg.graph.vertex_count() == 2);
  CHECK(lg.graph.edge_count() == 1);
}

TEST_CASE("loader: remaps sparse ids") {
  auto lg = parse("5 9\n9 5\n5 5\n");
  CHECK(lg.graph.vertex_count() == 2);
  CHECK(lg.graph.edge_count() == 1);
  CHECK(lg.original_ids == std::vector<std::uint64_t>{5, 9});
}

TEST_CASE("loader: empty input is the empty graph") {
  auto lg = parse("");
  CHECK(lg.graph.vertex_count() == 0);
  CHECK(lg.graph.edge_count() == 0);
  CHECK(parse("# only a comment\n\n% another\n").graph.vertex_count() == 0);
}

TEST_CASE("loader: comments, blank lines and extra columns") {
  auto lg = parse("# header\n% konect\n\n  3 4 1.5\n4\t7\n");
  CHECK(lg.graph.vertex_count() == 3);
  CHECK(lg.graph.edge_count() == 2);
  CHECK(lg.original_ids == std::vector<std::uint64_t>{3, 4, 7});
}

TEST_CASE("loader: malformed lines report their line number") {
  for (const char* text : {"0 1\n1 x\n", "0 1\n1\n", "0 1\n-3 2\n", "0 1\n2 3junk\n"}) {
    CAPTURE(text);
    try {
      parse(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("loader: unreadable file") { CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), std::runtime_error); }

TEST_CASE("graph: from_edges validates ids and normalizes") {
  std::vector<Edge> bad{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, bad), std::out_of_range);
  std::vector<Edge> messy{{2, 1}, {1, 2}, {0, 0}, {0, 2}};
  auto g = Graph::from_edges(3, messy);
  CHECK(g.edge_count() == 2);
  CHECK(g.endpoints(0).u == 0);
  CHECK(g.endpoints(0).v == 2);
  CHECK(g.endpoints(1).u == 1);
  CHECK(g.endpoints(1).v == 2);
  CHECK(g.find_edge(2, 1) == 1);
  CHECK(g.find_edge(0, 1) == -1);
}

TEST_CASE("graph: structural invariants on the corpus") {
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    std::size_t total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto nbrs = g.neighbors(v);
      total += nbrs.size();
      CHECK(std::adjacent_find(nbrs.begin(), nbrs.end(), std::greater_equal<>()) == nbrs.end());
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        CHECK(nbrs[i] != v);
        CHECK(g.adjacent(nbrs[i], v));
        const auto [a, b] = g.endpoints(g.incident_edges(v)[i]);
        CHECK(a == std::min(v, nbrs[i]));
        CHECK(b == std::max(v, nbrs[i]));
      }
    }
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("common_neighbors examples") {
  auto k4 = corpus::complete(4);
  CHECK(common_neighbors(k4, 0, 1) == VertexSet{2, 3});
  CHECK(common_neighbors(corpus::path(3), 0, 2) == VertexSet{1});
  auto c5 = corpus::cycle(5);
  for (EdgeId e = 0; e < c5.edge_count(); ++e) {
    CHECK(common_neighbors(c5, c5.endpoints(e).u, c5.endpoints(e).v).empty());
  }
  CHECK_THROWS_AS(common_neighbors(k4, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(common_neighbors(k4, 1, 1), std::invalid_argument);
}

TEST_CASE("common_neighbors matches brute force for n <= 64") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<VertexId>(2 + rng() % 63);
    const double p = (trial % 4 + 1) * 0.2;
    auto g = corpus::er_p(n, p, trial);
    for (int q = 0; q < 30; ++q) {
      const auto u = static_cast<VertexId>(rng() % n);
      auto v = static_cast<VertexId>(rng() % n);
      if (u == v) v = (v + 1) % n;
      VertexSet expected;
      for (VertexId w = 0; w < n; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) expected.push_back(w);
      CHECK(common_neighbors(g, u, v) == expected);
    }
  }
}

TEST_CASE("induced_edge_count examples") {
  const VertexSet s{0, 1, 2};
  CHECK(induced_edge_count(corpus::complete(4), s) == 3);
  CHECK(induced_edge_count(corpus::cycle(5), s) == 2);
  CHECK(induced_edge_count(corpus::petersen(), VertexSet{}) == 0);
}

TEST_CASE("common_neighborhood and is_clique") {
  auto g = corpus::moon_moser(9);
  CHECK(common_neighborhood(g, VertexSet{}).size() == 9);
  CHECK(common_neighborhood(g, VertexSet{0, 3}) == VertexSet{6, 7, 8});
  CHECK(is_clique(g, VertexSet{0, 3, 6}));
  CHECK_FALSE(is_clique(g, VertexSet{0, 1}));
  CHECK(is_clique(g, VertexSet{4}));
}

TEST_CASE("round trip through the canonical edge list") {
  for (const auto& [name, g] : corpus::graphs()) {
    CAPTURE(name);
    const auto text = serialize(g);
    auto back = parse(text);
    CHECK(back.graph == g);
    CHECK(serialize(back.graph) == text);
  }
}

TEST_CASE("isolated vertices survive serialization") {
  auto lg = parse("1 2\n7 7\n");
  CHECK(lg.graph.vertex_count() == 3);
  CHECK(lg.graph.degree(2) == 0);
  CHECK(serialize(lg.graph) == "0 1\n2 2\n");
  CHECK(parse(serialize(lg.graph)).graph == lg.graph);
}

TEST_CASE("line order does not change the loaded graph") {
  auto g = synth::gen_er({synth::Model::er, 40, 3.0, 9});
  std::istringstream canonical(serialize(g));
  std::vector<std::string> lines;
  for (std::string line; std::getline(canonical, line);) {
    // Flip endpoint order on every other line as well.
    if (lines.size() % 2) {
      std::istringstream pair(line);
      std::string a, b;
      pair >> a >> b;
      line = b + " " + a;
    }
    lines.push_back(line);
  }
  std::shuffle(lines.begin(), lines.end(), std::mt19937(3));
  std::string shuffled;
  for (const auto& l : lines) shuffled += l + "\n";
  CHECK(parse(shuffled).graph == g);
}
