#include "improper/graph.hpp"

#include <algorithm>

#include "improper/errors.hpp"

namespace improper {

std::vector<Vertex> to_vertices(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet to_set(std::span<const Vertex> vs) {
    VertexSet s = 0;
    for (Vertex v : vs) s |= bit(v);
    return s;
}

Graph::Graph(std::size_t vertex_count) {
    if (vertex_count > kMaxVertices) {
        throw GraphError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    adj_.assign(vertex_count, 0);
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    const auto n = static_cast<Vertex>(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint out of range");
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) {
            throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet s : adj_) twice += popcount(s);
    return twice / 2;
}

VertexSet Graph::all() const {
    return vertex_count() == 64 ? ~VertexSet{0} : (bit(static_cast<Vertex>(vertex_count())) - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < static_cast<Vertex>(vertex_count()); ++u) {
        for_each_vertex(adj_[u], [&](Vertex v) {
            if (v > u) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (adjacent(keep[i], keep[j])) {
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(keep.size(), es);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != vertex_count()) throw GraphError("permutation size mismatch");
    return induced(perm);
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= static_cast<Vertex>(g.vertex_count())) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    VertexDeletion out;
    for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u) {
        if (u != v) out.original.push_back(u);
    }
    out.graph = g.induced(out.original);
    return out;
}

std::vector<VertexSet> component_masks(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.all();
    while (unseen) {
        VertexSet comp = bit(lowest(unseen));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (VertexSet c : component_masks(g)) out.push_back(to_vertices(c));
    return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() <= 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (auto [u, v] : b.edges()) es.emplace_back(u + shift, v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), es);
}

std::vector<VertexSet> CliqueSet::masks() const {
    std::vector<VertexSet> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) out.push_back(to_set(c));
    return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (!p && !x) {
        if (popcount(r) >= 2) out.push_back(r);
        return;
    }
    Vertex pivot = -1;
    int best = -1;
    for_each_vertex(p | x, [&](Vertex u) {
        int c = popcount(p & g.neighbors(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    for_each_vertex(p & ~g.neighbors(pivot), [&](Vertex v) {
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    });
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
    std::vector<VertexSet> found;
    bron_kerbosch(g, 0, g.all(), 0, found);
    CliqueSet out;
    for (VertexSet c : found) out.cliques.push_back(to_vertices(c));
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

bool has_induced_claw(const Graph& g) {
    for (Vertex c = 0; c < static_cast<Vertex>(g.vertex_count()); ++c) {
        auto nb = to_vertices(g.neighbors(c));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace improper
