#pragma once

#include <string>
#include <string_view>

#include "improper/graph.hpp"

namespace improper {

// DIMACS-like edge list:
//   c comment
//   p <n> <m>
//   e <u> <v>      (0 <= u < v < n, exactly m lines)
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6, short form only (n <= 62). Trailing whitespace is ignored.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

std::string to_dot(const Graph& g);

// Accepts either of the above formats; edge lists are recognised by a leading
// 'p' or 'c' line.
Graph parse_graph(std::string_view text);

}  // namespace improper
