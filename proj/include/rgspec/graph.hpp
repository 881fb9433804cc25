#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rgspec {

struct Coord {
  int x = 0;
  int y = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Immutable undirected simple graph on vertices 0..n-1. Adjacency lists are
// sorted, symmetric, loop- and duplicate-free; lattice coordinates are an
// optional side table (set by box builders), not part of vertex identity.
class Graph {
 public:
  static constexpr int kDefaultVertexCap = 200000;

  Graph() = default;

  // Builds from an edge list; duplicates are dropped, self-loops and
  // out-of-range endpoints reject.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges,
                          int vertex_cap = kDefaultVertexCap);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int max_degree() const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool has_coords() const { return has_coords_; }
  Coord coord(int v) const { return coords_[v]; }
  void set_coords(std::vector<Coord> coords);

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Coord> coords_;
  bool has_coords_ = false;
};

// --- builders ---------------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);

// Full induced lattice graph on [0,n]^2 with coords set; (n+1)^2 vertices,
// vertex index = y*(n+1) + x.
Graph box_lattice(int n);

// Radius-r ball of the d-regular tree rooted at vertex 0 (BFS order).
Graph regular_tree_ball(int d, int r);

// Ball B_n of the lamplighter group Z_2 wr Z with the switch-walk generating
// set {t, at}: vertices are (lamps, marker) with lamps supported on [-n, n]
// and |marker| <= n; every generator moves the marker and optionally toggles
// the lamp at the position being left. Vertex index =
// (marker + n) * 2^(2n+1) + lamp_bits, bit k+n = lamp at position k.
Graph lamplighter_ball(int n, int vertex_cap = Graph::kDefaultVertexCap);

int lamplighter_vertex(int n, std::uint32_t lamps, int marker);

// --- structural utilities ---------------------------------------------------

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for dropped vertices
  std::vector<int> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

// Same vertex set; edge {u,v} kept iff deg_g(u) <= cap and deg_g(v) <= cap.
Graph degree_truncate(const Graph& g, int cap);

std::vector<int> connected_component(const Graph& g, int v);

}  // namespace rgspec
