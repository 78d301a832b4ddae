#include "mce/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace mce {

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("edge endpoint exceeds vertex count");
    }
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  canon.erase(std::unique(canon.begin(), canon.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
              canon.end());
  if (canon.size() > std::numeric_limits<EdgeId>::max()) {
    throw std::length_error("too many edges");
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.neighbors_.resize(2 * canon.size());
  g.edge_ids_.resize(2 * canon.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order fills every adjacency list in ascending order:
  // the smaller neighbors of x arrive (as (w, x), w < x) before any (x, y).
  for (EdgeId id = 0; id < canon.size(); ++id) {
    const auto& e = canon[id];
    g.neighbors_[fill[e.u]] = e.v;
    g.edge_ids_[fill[e.u]++] = id;
    g.neighbors_[fill[e.v]] = e.u;
    g.edge_ids_[fill[e.v]++] = id;
  }
  g.endpoints_ = std::move(canon);
  return g;
}

std::int64_t Graph::find_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return -1;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

namespace {

bool parse_id(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::string_view next_token(std::string_view& rest) {
  constexpr std::string_view ws = " \t\r\v\f";
  auto start = rest.find_first_not_of(ws);
  if (start == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(start);
  auto end = rest.find_first_of(ws);
  auto token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    auto first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two vertex ids");
    std::uint64_t a = 0, b = 0;
    if (!parse_id(first, a)) throw ParseError(line_no, "malformed vertex id '" + std::string(first) + "'");
    if (!parse_id(second, b)) throw ParseError(line_no, "malformed vertex id '" + std::string(second) + "'");
    raw.emplace_back(a, b);
  }

  LoadedGraph out;
  auto& ids = out.original_ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max()) {
    throw std::length_error("too many vertices");
  }

  auto dense = [&ids](std::uint64_t id) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back({dense(a), dense(b)});
  out.graph = Graph::from_edges(static_cast<VertexId>(ids.size()), edges);
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto nbrs = g.neighbors(u);
    if (nbrs.empty()) {
      out << u << ' ' << u << '\n';
      continue;
    }
    for (auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u); it != nbrs.end(); ++it) {
      out << u << ' ' << *it << '\n';
    }
  }
}

VertexSet common_neighbors(const Graph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t induced_edge_count(const Graph& g, std::span<const VertexId> s) {
  std::size_t count = 0;
  for (VertexId u : s) {
    auto nbrs = g.neighbors(u);
    // Count each edge once from its smaller endpoint.
    auto lo = std::upper_bound(s.begin(), s.end(), u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    while (lo != s.end() && it != nbrs.end()) {
      if (*lo < *it) {
        ++lo;
      } else if (*it < *lo) {
        ++it;
      } else {
        ++count;
        ++lo;
        ++it;
      }
    }
  }
  return count;
}

VertexSet common_neighborhood(const Graph& g, std::span<const VertexId> s) {
  VertexSet out;
  if (s.empty()) {
    out.resize(g.vertex_count());
    for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
    return out;
  }
  auto first = g.neighbors(s[0]);
  out.assign(first.begin(), first.end());
  VertexSet tmp;
  for (std::size_t i = 1; i < s.size() && !out.empty(); ++i) {
    auto nbrs = g.neighbors(s[i]);
    tmp.clear();
    std::set_intersection(out.begin(), out.end(), nbrs.begin(), nbrs.end(), std::back_inserter(tmp));
    out.swap(tmp);
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const VertexId> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace mce
