#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

inline constexpr std::size_t kCanonicalGuard = 12;

// Ordering of vertices (result[i] = old vertex placed at position i) that
// minimises the upper-triangle adjacency bit string, restricted to orderings
// that list vertices by descending degree. Throws GuardExceeded above 12
// vertices.
std::vector<Vertex> canonical_labeling(const Graph& g);

// graph6 string of the canonically relabelled graph: equal iff isomorphic.
std::string canonical_form(const Graph& g);

// Canonical representatives of every graph on exactly n vertices, sorted by
// canonical key. Built by extending (n-1)-vertex representatives with one
// vertex and deduplicating.
std::vector<Graph> enumerate_graphs(std::size_t n);
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

// Concatenation over 1..max_n.
std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n);
std::vector<Graph> enumerate_connected_graphs_up_to(std::size_t max_n);

}  // namespace improper
