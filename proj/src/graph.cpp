#include "rgspec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rgspec/errors.hpp"

namespace rgspec {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges, int vertex_cap) {
  if (n < 0) throw ConstructionError("graph: negative vertex count");
  if (n > vertex_cap)
    throw RefusalError("graph: vertex count " + std::to_string(n) + " exceeds cap " +
                       std::to_string(vertex_cap));
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ConstructionError("graph: edge endpoint out of range");
    if (u == v) throw ConstructionError("graph: self-loop rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.m_ += static_cast<std::int64_t>(nb.size());
  }
  g.m_ /= 2;
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_coords(std::vector<Coord> coords) {
  if (static_cast<int>(coords.size()) != n_)
    throw ConstructionError("graph: coordinate table size mismatch");
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) {
      int dist = std::abs(coords[u].x - coords[v].x) + std::abs(coords[u].y - coords[v].y);
      if (dist != 1) throw ConstructionError("graph: edge joins non-adjacent lattice points");
    }
  coords_ = std::move(coords);
  has_coords_ = true;
}

Graph path_graph(int n) {
  if (n < 1) throw ConstructionError("path_graph: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ConstructionError("cycle_graph: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph box_lattice(int n) {
  if (n < 0) throw ConstructionError("box_lattice: n >= 0 required");
  const int side = n + 1;
  auto id = [side](int x, int y) { return y * side + x; };
  std::vector<std::pair<int, int>> e;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      if (x + 1 < side) e.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < side) e.emplace_back(id(x, y), id(x, y + 1));
    }
  Graph g = Graph::from_edges(side * side, e);
  std::vector<Coord> coords(static_cast<std::size_t>(side) * side);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) coords[id(x, y)] = {x, y};
  g.set_coords(std::move(coords));
  return g;
}

Graph regular_tree_ball(int d, int r) {
  if (d < 2) throw ConstructionError("regular_tree_ball: d >= 2 required");
  if (r < 0) throw ConstructionError("regular_tree_ball: r >= 0 required");
  std::vector<std::pair<int, int>> e;
  int next = 1;
  std::vector<std::pair<int, int>> frontier;  // (vertex, depth)
  frontier.emplace_back(0, 0);
  std::vector<std::pair<int, int>> nextf;
  for (int depth = 0; depth < r; ++depth) {
    nextf.clear();
    for (auto [v, dep] : frontier) {
      const int children = (dep == 0) ? d : d - 1;
      for (int c = 0; c < children; ++c) {
        if (next > Graph::kDefaultVertexCap)
          throw RefusalError("regular_tree_ball: vertex cap exceeded");
        e.emplace_back(v, next);
        nextf.emplace_back(next, dep + 1);
        ++next;
      }
    }
    frontier.swap(nextf);
  }
  return Graph::from_edges(next, e);
}

int lamplighter_vertex(int n, std::uint32_t lamps, int marker) {
  const int bits = 2 * n + 1;
  return (marker + n) * (1 << bits) + static_cast<int>(lamps);
}

Graph lamplighter_ball(int n, int vertex_cap) {
  if (n < 1) throw ConstructionError("lamplighter_ball: n >= 1 required");
  const int bits = 2 * n + 1;
  if (bits >= 30) throw RefusalError("lamplighter_ball: lamp configuration space too large");
  const std::int64_t count = static_cast<std::int64_t>(bits) * (1LL << bits);
  if (count > vertex_cap)
    throw RefusalError("lamplighter_ball: " + std::to_string(count) + " vertices exceeds cap " +
                       std::to_string(vertex_cap));
  const std::uint32_t configs = 1u << bits;
  std::vector<std::pair<int, int>> e;
  // Generators t and at: moving right from marker k may toggle the lamp at k,
  // moving left from k may toggle the lamp at k-1. Emitting only right-moves
  // from every vertex covers all edges once.
  for (int k = -n; k < n; ++k) {
    for (std::uint32_t v = 0; v < configs; ++v) {
      const int from = lamplighter_vertex(n, v, k);
      e.emplace_back(from, lamplighter_vertex(n, v, k + 1));
      e.emplace_back(from, lamplighter_vertex(n, v ^ (1u << (k + n)), k + 1));
    }
  }
  return Graph::from_edges(static_cast<int>(count), e, vertex_cap);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.vertex_count(), -1);
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.vertex_count())
      throw ConstructionError("induced_subgraph: vertex out of range");
  out.new_to_old = sorted;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) out.old_to_new[sorted[i]] = i;
  std::vector<std::pair<int, int>> e;
  for (int nu = 0; nu < static_cast<int>(sorted.size()); ++nu) {
    for (int w : g.neighbors(sorted[nu])) {
      int nw = out.old_to_new[w];
      if (nw > nu) e.emplace_back(nu, nw);
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(sorted.size()), e);
  if (g.has_coords()) {
    std::vector<Coord> coords(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) coords[i] = g.coord(sorted[i]);
    out.graph.set_coords(std::move(coords));
  }
  return out;
}

Graph degree_truncate(const Graph& g, int cap) {
  if (cap < 0) throw ConstructionError("degree_truncate: cap >= 0 required");
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    if (g.degree(u) <= cap && g.degree(v) <= cap) e.emplace_back(u, v);
  Graph out = Graph::from_edges(g.vertex_count(), e);
  if (g.has_coords()) {
    std::vector<Coord> coords(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) coords[v] = g.coord(v);
    out.set_coords(std::move(coords));
  }
  return out;
}

std::vector<int> connected_component(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw ConstructionError("connected_component: vertex out of range");
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(v);
  seen[v] = 1;
  std::vector<int> comp;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    comp.push_back(u);
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace rgspec
