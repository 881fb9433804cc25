#include "rgspec/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "rgspec/errors.hpp"

namespace rgspec {

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  if (g.has_coords()) {
    os << "#coords\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      os << v << ' ' << g.coord(v).x << ' ' << g.coord(v).y << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& is) {
  int n = -1;
  std::int64_t m = -1;
  if (!(is >> n >> m)) throw ConstructionError("edge list: missing header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(std::max<std::int64_t>(m, 0)));
  for (std::int64_t i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw ConstructionError("edge list: truncated edge section");
    edges.emplace_back(u, v);
  }
  Graph g = Graph::from_edges(n, edges);
  std::string tag;
  if (is >> tag) {
    if (tag != "#coords") throw ConstructionError("edge list: unexpected trailer '" + tag + "'");
    std::vector<Coord> coords(n);
    for (int i = 0; i < n; ++i) {
      int v, x, y;
      if (!(is >> v >> x >> y)) throw ConstructionError("edge list: truncated coords");
      if (v < 0 || v >= n) throw ConstructionError("edge list: coord vertex out of range");
      coords[v] = {x, y};
    }
    g.set_coords(std::move(coords));
  }
  return g;
}

Graph read_edge_list_string(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConstructionError("cannot open graph file: " + path);
  return read_edge_list(is);
}

void save_graph_file(const std::string& path, const Graph& g) {
  std::ofstream os(path);
  if (!os) throw ConstructionError("cannot write graph file: " + path);
  write_edge_list(os, g);
}

}  // namespace rgspec
