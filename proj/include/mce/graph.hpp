#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mce {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Ascending list of vertex ids.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId u;
  VertexId v;

  bool operator==(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph in CSR form.
///
/// Adjacency lists are strictly ascending. Every undirected edge carries an
/// id in 0..m-1; ids follow the lexicographic order of (min, max) endpoint
/// pairs, so they are stable for a given vertex numbering.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Self-loops and duplicate edges
  /// (in either direction) are dropped.
  static Graph from_edges(VertexId n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return endpoints_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Endpoints of an edge with u < v.
  const Edge& endpoints(EdgeId e) const { return endpoints_[e]; }

  /// Binary search in the shorter adjacency list; returns -1 if absent.
  std::int64_t find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v) >= 0; }

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Edge> endpoints_;
};

/// A graph read from an edge list, plus the original id of each dense vertex.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;
};

/// Parses whitespace-separated integer pairs, one edge per line. Lines whose
/// first non-blank character is '#' or '%' are comments; tokens after the
/// first two are ignored. Vertex ids are densified in ascending order of the
/// original ids. A self-loop line "v v" contributes vertex v without an edge.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Canonical text form: "u v\n" for each edge with u < v in (u, v) order, and
/// "v v\n" for each isolated vertex at its sorted position, so that
/// load_edge_list(write_edge_list(g)) == g.
void write_edge_list(const Graph& g, std::ostream& out);

/// Common neighbors of u and v by sorted merge.
VertexSet common_neighbors(const Graph& g, VertexId u, VertexId v);

/// Number of edges with both endpoints in s (s ascending).
std::size_t induced_edge_count(const Graph& g, std::span<const VertexId> s);

/// Common neighborhood N(s, g) of an arbitrary vertex set; N({}) = V.
VertexSet common_neighborhood(const Graph& g, std::span<const VertexId> s);

bool is_clique(const Graph& g, std::span<const VertexId> s);

}  // namespace mce
