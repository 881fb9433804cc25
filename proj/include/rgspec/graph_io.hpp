#pragma once

#include <iosfwd>
#include <string>

#include "rgspec/graph.hpp"

namespace rgspec {

// Plain text edge-list format: first line "n m", then m lines "u v" sorted
// lexicographically; if coordinates are present, a "#coords" line followed by
// n lines "v x y".
void write_edge_list(std::ostream& os, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_string(const std::string& text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g);

}  // namespace rgspec
