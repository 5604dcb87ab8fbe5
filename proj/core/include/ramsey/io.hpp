#pragma once

#include <iosfwd>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

class EdgeColoring; // color.hpp

// Edge-list text format: line 1 "n e", then e lines "u v" with
// 0 <= u < v < n, ASCII decimal, single-space separated. Lines starting
// with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Multigraph edge list with multiplicity: "n e" then lines "u v mult".
void write_multigraph(std::ostream& out, const MultiGraph& g);

// Coloring file format: header "n e r", then e lines "u v c".
void write_coloring(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring_file(const std::string& path, const EdgeColoring& c);

} // namespace ramsey
