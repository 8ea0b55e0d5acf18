#pragma once

#include <string>
#include <string_view>

#include "cleangraph/graph.hpp"

namespace cleangraph::cli {

// Standard graph6: size header, then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, +63.
std::string export_graph6(const Graph& g);

// Inverse of export_graph6. Vertices are labelled "0".."n-1". Throws
// kInvalidSpec on malformed input.
Graph parse_graph6(std::string_view text);

// Undirected DOT with vertex labels as node names, edges in lexicographic
// vertex order.
std::string export_dot(const Graph& g);

}  // namespace cleangraph::cli
