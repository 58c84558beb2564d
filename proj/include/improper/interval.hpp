#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

// impropriety: a vertex scores the number of intervals strictly inside it.
// properness: a vertex scores the number of intervals strictly containing it.
enum class Objective { impropriety, properness };

std::string to_string(Objective objective);

// Permutation of indices into a CliqueSet (by default maximal_cliques(G)).
struct CliqueOrdering {
    std::vector<std::size_t> order;

    friend bool operator==(const CliqueOrdering&, const CliqueOrdering&) = default;
};

// Positions of the first and last clique containing a vertex.
struct VertexRange {
    int first = 0;
    int last = 0;

    friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalRepresentation {
    std::vector<Interval> intervals;

    std::size_t size() const { return intervals.size(); }
    friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;
};

struct ContainmentProfile {
    std::vector<int> contained_count;
    int max_count = 0;
    Vertex argmax = -1;  // smallest vertex attaining max_count; -1 when empty
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t orderings_explored = 0;
    std::uint64_t feasibility_prunes = 0;
    std::uint64_t bound_prunes = 0;

    SearchStats& operator+=(const SearchStats& o);
};

struct ImproprietyCertificate {
    Objective objective = Objective::impropriety;
    int value = 0;
    IntervalRepresentation witness;
    Vertex basepoint_witness = -1;
    SearchStats stats;
};

struct SearchOptions {
    Objective objective = Objective::impropriety;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Recognition.
bool is_chordal(const Graph& g);
// nullopt for interval graphs, otherwise "chordless cycle" or "asteroidal triple".
std::optional<std::string> interval_obstruction(const Graph& g);
bool is_interval_graph(const Graph& g);

// Every consecutive arrangement of the cliques, one per mirror pair (the one
// whose first index is smaller than its last). The visitor returns false to
// stop early. Nothing is visited for non-interval graphs.
void for_each_consecutive_ordering(const Graph& g, const CliqueSet& cliques,
                                   const std::function<bool(const CliqueOrdering&)>& visit);
std::vector<CliqueOrdering> consecutive_orderings(const Graph& g);

bool is_consecutive(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o);

// Isolated vertices get positions after the last clique, in id order.
std::vector<VertexRange> ranges(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o);
std::vector<VertexRange> ranges(const Graph& g, const CliqueOrdering& o);

ContainmentProfile nesting_profile(std::span<const VertexRange> rs,
                                   Objective objective = Objective::impropriety);
ContainmentProfile forced_nesting(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o,
                                  Objective objective = Objective::impropriety);
ContainmentProfile forced_nesting(const Graph& g, const CliqueOrdering& o,
                                  Objective objective = Objective::impropriety);

// Canonical placement: walking the gaps left to right, a gap first closes the
// vertices whose range ends there (ascending first, then id) and then opens
// the vertices whose range starts right after it (ascending last, then id).
// Its containment profile equals nesting_profile of the ranges.
IntervalRepresentation realize_ranges(std::span<const VertexRange> rs);
IntervalRepresentation realize(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o);
IntervalRepresentation realize(const Graph& g, const CliqueOrdering& o);

// Throws InvalidRepresentation: reversed/degenerate intervals, repeated
// endpoints, or (when a graph is given) an intersection graph mismatch.
void validate_representation(const IntervalRepresentation& r, const Graph* g = nullptr);
Graph intersection_graph(const IntervalRepresentation& r);

ContainmentProfile representation_profile(const IntervalRepresentation& r, Objective objective);
ContainmentProfile representation_impropriety(const IntervalRepresentation& r);
ContainmentProfile representation_impropriety(const IntervalRepresentation& r, const Graph& g);

// Exact minimum over all representations, by branch-and-bound over clique
// arrangements. Disconnected graphs take the max over components, with the
// components laid side by side in the witness. Throws NotIntervalGraph or
// SearchAborted (deadline).
ImproprietyCertificate optimize(const Graph& g, const SearchOptions& options);
ImproprietyCertificate impropriety(const Graph& g);
ImproprietyCertificate properness(const Graph& g);

namespace detail {

struct ComponentResult {
    int value = 0;
    std::vector<std::size_t> order;  // optimal arrangement (indices into cliques)
    VertexSet maximizers = 0;        // vertices attaining value in some optimal arrangement
    SearchStats stats;
};

// Branch-and-bound over arrangements of a connected interval graph.
// With collect_maximizers the search keeps ties to gather every maximizer.
ComponentResult search_component(const Graph& comp, const std::vector<VertexSet>& cliques,
                                 const SearchOptions& options, bool collect_maximizers);

}  // namespace detail

}  // namespace improper
