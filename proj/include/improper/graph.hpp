#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace improper {

using Vertex = int;

// Vertex sets are bitmasks; graphs are capped at 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> to_vertices(VertexSet s);
VertexSet to_set(std::span<const Vertex> vs);

template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        fn(lowest(s));
        s &= s - 1;
    }
}

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Values are immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    // Throws GraphError on self-loops, duplicates, or out-of-range endpoints.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1u; }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v] | bit(v); }
    int degree(Vertex v) const { return popcount(adj_[v]); }
    VertexSet all() const;

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    Graph induced(std::span<const Vertex> keep) const;
    // new vertex i is old vertex perm[i]
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

struct VertexDeletion {
    Graph graph;
    std::vector<Vertex> original;  // original[new_id] = old_id
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);

// Components sorted by minimum member; members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::vector<VertexSet> component_masks(const Graph& g);
bool is_connected(const Graph& g);

// Disjoint union, right graph's vertices shifted after the left's.
Graph disjoint_union(const Graph& a, const Graph& b);

// Maximal cliques of size >= 2 (isolated vertices are not listed), each sorted,
// list in lexicographic order.
struct CliqueSet {
    std::vector<std::vector<Vertex>> cliques;

    std::size_t size() const { return cliques.size(); }
    std::vector<VertexSet> masks() const;
};

CliqueSet maximal_cliques(const Graph& g);

bool has_induced_claw(const Graph& g);

}  // namespace improper
