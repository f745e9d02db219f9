#pragma once

#include <string>
#include <string_view>

#include "gfree/graph.hpp"

namespace gfree {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list text: the vertex count, an optional ';', then vertex pairs
/// separated by ',' or newlines, e.g. "3; 0 1, 1 2". Whitespace is free.
Graph parse_edge_list(std::string_view text);

/// One graph6 record. A leading ">>graph6<<" header and trailing newline are
/// tolerated.
Graph parse_graph6(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace gfree
