#pragma once

#include <cstddef>
#include <vector>

#include "improper/graph.hpp"
#include "improper/interval.hpp"

namespace improper {

// Operational stand-ins for basepoint / local / side / exterior components:
//   basepoint witness  - attains the maximum containment in some optimal arrangement
//   local component    - component of G - b
//   side component     - in a given representation, has an interval not strictly inside b
//   exterior component - is a side component in at least one valid representation

// Witnesses come from the components whose optimum equals the graph's.
// Throws NotIntervalGraph, or EmptyForProper when the impropriety is 0.
std::vector<Vertex> basepoint_witnesses(const Graph& g);

// connected_components(G - b) in original vertex ids.
std::vector<std::vector<Vertex>> local_components(const Graph& g, Vertex b);

struct SideComponentView {
    IntervalRepresentation representation;
    Vertex basepoint = 0;
    std::vector<std::vector<Vertex>> components;  // local components of the basepoint
    std::vector<std::size_t> side_components;      // indices into components
};

SideComponentView side_components(const IntervalRepresentation& r, const Graph& g, Vertex b);

// One flag per local_components(g, b) entry.
std::vector<bool> exterior_components(const Graph& g, Vertex b);

struct BasepointAnalysis {
    Vertex basepoint = 0;
    std::vector<std::vector<Vertex>> local_components;
    std::vector<bool> exterior;

    std::size_t exterior_count() const;
};

struct StructureReport {
    int impropriety = 0;
    std::vector<Vertex> basepoint_witnesses;
    std::vector<BasepointAnalysis> per_basepoint;
};

// Empty witness list for proper (impropriety 0) graphs.
StructureReport analyze_structure(const Graph& g);

}  // namespace improper
