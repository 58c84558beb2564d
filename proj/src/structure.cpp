#include "improper/structure.hpp"

#include <algorithm>

#include "improper/errors.hpp"

namespace improper {

namespace {

void check_vertex(const Graph& g, Vertex b) {
    if (b < 0 || b >= static_cast<Vertex>(g.vertex_count())) {
        throw GraphError("vertex " + std::to_string(b) + " out of range");
    }
}

bool strictly_inside(const VertexRange& inner, const VertexRange& outer) {
    return outer.first < inner.first && inner.last < outer.last;
}

}  // namespace

std::vector<Vertex> basepoint_witnesses(const Graph& g) {
    if (auto why = interval_obstruction(g)) throw NotIntervalGraph(*why);
    struct Found {
        int value;
        VertexSet maximizers;
    };
    std::vector<Found> found;
    int best = 0;
    for (const auto& members : connected_components(g)) {
        const Graph comp = g.induced(members);
        auto result = detail::search_component(comp, maximal_cliques(comp).masks(), SearchOptions{}, true);
        VertexSet mapped = 0;
        for_each_vertex(result.maximizers, [&](Vertex v) { mapped |= bit(members[v]); });
        found.push_back({result.value, mapped});
        best = std::max(best, result.value);
    }
    if (best == 0) throw EmptyForProper();
    VertexSet out = 0;
    for (const auto& f : found) {
        if (f.value == best) out |= f.maximizers;
    }
    return to_vertices(out);
}

std::vector<std::vector<Vertex>> local_components(const Graph& g, Vertex b) {
    check_vertex(g, b);
    auto del = delete_vertex(g, b);
    auto comps = connected_components(del.graph);
    for (auto& comp : comps) {
        for (Vertex& v : comp) v = del.original[v];
    }
    return comps;
}

SideComponentView side_components(const IntervalRepresentation& r, const Graph& g, Vertex b) {
    check_vertex(g, b);
    validate_representation(r, &g);
    SideComponentView view;
    view.representation = r;
    view.basepoint = b;
    view.components = local_components(g, b);
    const Interval& base = r.intervals[b];
    for (std::size_t i = 0; i < view.components.size(); ++i) {
        const bool escapes = std::any_of(view.components[i].begin(), view.components[i].end(), [&](Vertex u) {
            const Interval& iv = r.intervals[u];
            return !(base.left < iv.left && iv.right < base.right);
        });
        if (escapes) view.side_components.push_back(i);
    }
    return view;
}

std::vector<bool> exterior_components(const Graph& g, Vertex b) {
    check_vertex(g, b);
    if (auto why = interval_obstruction(g)) throw NotIntervalGraph(*why);
    const auto comps = local_components(g, b);
    std::vector<bool> exterior(comps.size(), false);

    VertexSet home = 0;
    for (VertexSet c : component_masks(g)) {
        if (c & bit(b)) home = c;
    }
    // Components outside b's own component cannot meet b at all.
    std::vector<std::size_t> undecided;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (home & bit(comps[i].front())) {
            undecided.push_back(i);
        } else {
            exterior[i] = true;
        }
    }
    if (undecided.empty()) return exterior;

    // Every ordering's canonical placement puts a vertex outside b exactly
    // when its range is not strictly nested in b's, so ranges decide it.
    const auto members = to_vertices(home);
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
    const Graph sub = g.induced(members);
    const CliqueSet cliques = maximal_cliques(sub);
    for_each_consecutive_ordering(sub, cliques, [&](const CliqueOrdering& o) {
        const auto rs = ranges(sub, cliques, o);
        const VertexRange base = rs[local[b]];
        std::erase_if(undecided, [&](std::size_t i) {
            for (Vertex u : comps[i]) {
                if (!strictly_inside(rs[local[u]], base)) {
                    exterior[i] = true;
                    return true;
                }
            }
            return false;
        });
        return !undecided.empty();
    });
    return exterior;
}

std::size_t BasepointAnalysis::exterior_count() const {
    return static_cast<std::size_t>(std::count(exterior.begin(), exterior.end(), true));
}

StructureReport analyze_structure(const Graph& g) {
    StructureReport report;
    report.impropriety = impropriety(g).value;
    if (report.impropriety == 0) return report;
    report.basepoint_witnesses = basepoint_witnesses(g);
    for (Vertex b : report.basepoint_witnesses) {
        BasepointAnalysis a;
        a.basepoint = b;
        a.local_components = local_components(g, b);
        a.exterior = exterior_components(g, b);
        report.per_basepoint.push_back(std::move(a));
    }
    return report;
}

}  // namespace improper
