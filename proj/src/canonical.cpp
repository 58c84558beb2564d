#include "improper/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "improper/errors.hpp"
#include "improper/graph_io.hpp"

namespace improper {

std::vector<Vertex> canonical_labeling(const Graph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    if (g.vertex_count() > kCanonicalGuard) {
        throw GuardExceeded("canonical_form: " + std::to_string(n) + " vertices exceeds guard of " +
                            std::to_string(kCanonicalGuard));
    }
    std::vector<int> slot_degree(n);
    for (Vertex v = 0; v < n; ++v) slot_degree[v] = g.degree(v);
    std::sort(slot_degree.begin(), slot_degree.end(), std::greater<>());

    // Transposing two twins fixes every other vertex, so one representative
    // per twin class suffices at each branch point.
    std::vector<VertexSet> twins(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) twins[u] |= bit(v);
        }
    }

    struct State {
        std::vector<Vertex> order;
        VertexSet used = 0;
    };
    std::vector<State> states(1);
    for (Vertex pos = 0; pos < n; ++pos) {
        std::vector<State> next;
        std::uint64_t best = ~std::uint64_t{0};
        for (const State& s : states) {
            VertexSet cands = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (!(s.used & bit(v)) && g.degree(v) == slot_degree[pos]) cands |= bit(v);
            }
            for_each_vertex(cands, [&](Vertex v) {
                if (twins[v] & cands & (bit(v) - 1)) return;
                std::uint64_t column = 0;
                for (Vertex u : s.order) column = (column << 1) | (g.adjacent(u, v) ? 1u : 0u);
                if (column > best) return;
                if (column < best) {
                    best = column;
                    next.clear();
                }
                State t = s;
                t.order.push_back(v);
                t.used |= bit(v);
                next.push_back(std::move(t));
            });
        }
        states = std::move(next);
    }
    return states.front().order;
}

std::string canonical_form(const Graph& g) {
    return to_graph6(g.relabeled(canonical_labeling(g)));
}

namespace {

std::vector<std::vector<Graph>> build_levels(std::size_t max_n, bool connected_only) {
    std::vector<std::vector<Graph>> levels(max_n + 1);
    if (max_n == 0) return levels;
    levels[1].push_back(Graph(1));
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<std::string, Graph> found;
        const auto fresh = static_cast<Vertex>(n - 1);
        for (const Graph& base : levels[n - 1]) {
            auto base_edges = base.edges();
            const VertexSet subsets = bit(fresh);
            for (VertexSet s = connected_only ? 1 : 0; s < subsets; ++s) {
                auto edges = base_edges;
                for_each_vertex(s, [&](Vertex u) { edges.emplace_back(u, fresh); });
                Graph g(n, edges);
                Graph canon = g.relabeled(canonical_labeling(g));
                auto key = to_graph6(canon);
                found.try_emplace(std::move(key), std::move(canon));
            }
        }
        for (auto& [key, g] : found) levels[n].push_back(std::move(g));
    }
    return levels;
}

std::vector<Graph> flatten(std::vector<std::vector<Graph>> levels) {
    std::vector<Graph> out;
    for (auto& level : levels) {
        for (auto& g : level) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n) { return std::move(build_levels(n, false)[n]); }

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
    return std::move(build_levels(n, true)[n]);
}

std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n) {
    return flatten(build_levels(max_n, false));
}

std::vector<Graph> enumerate_connected_graphs_up_to(std::size_t max_n) {
    return flatten(build_levels(max_n, true));
}

}  // namespace improper
