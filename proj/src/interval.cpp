#include "improper/interval.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>

#include "improper/errors.hpp"

namespace improper {

std::string to_string(Objective objective) {
    return objective == Objective::impropriety ? "impropriety" : "properness";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    orderings_explored += o.orderings_explored;
    feasibility_prunes += o.feasibility_prunes;
    bound_prunes += o.bound_prunes;
    return *this;
}

// ---------------------------------------------------------------------------
// Recognition

bool is_chordal(const Graph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination ordering iff the graph is chordal.
    std::vector<Vertex> visit;
    std::vector<int> weight(n, 0);
    VertexSet visited = 0;
    for (Vertex step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!(visited & bit(v)) && (pick < 0 || weight[v] > weight[pick])) pick = v;
        }
        visit.push_back(pick);
        visited |= bit(pick);
        for_each_vertex(g.neighbors(pick) & ~visited, [&](Vertex u) { ++weight[u]; });
    }
    VertexSet before = 0;
    for (Vertex v : visit) {
        const VertexSet earlier = g.neighbors(v) & before;
        bool clique = true;
        for_each_vertex(earlier, [&](Vertex w) {
            if ((earlier & ~bit(w) & ~g.neighbors(w)) != 0) clique = false;
        });
        if (!clique) return false;
        before |= bit(v);
    }
    return true;
}

namespace {

struct CliqueModel {
    std::vector<VertexSet> clique;        // vertex mask per clique
    std::vector<std::uint64_t> member_of;  // clique mask per vertex
    std::vector<int> total;                // number of cliques per vertex
};

CliqueModel make_model(std::size_t n, const std::vector<VertexSet>& cliques) {
    if (cliques.size() > 64) throw GuardExceeded("more than 64 maximal cliques");
    CliqueModel m;
    m.clique = cliques;
    m.member_of.assign(n, 0);
    m.total.assign(n, 0);
    for (std::size_t c = 0; c < cliques.size(); ++c) {
        for_each_vertex(cliques[c], [&](Vertex v) {
            m.member_of[v] |= std::uint64_t{1} << c;
            ++m.total[v];
        });
    }
    return m;
}

int highest_index(std::uint64_t s) { return 63 - std::countl_zero(s); }

// Plain feasibility enumeration shared by recognition and the streaming API.
class OrderingEnumerator {
public:
    OrderingEnumerator(std::size_t n, const std::vector<VertexSet>& cliques,
                       const std::function<bool(const CliqueOrdering&)>& visit)
        : model_(make_model(n, cliques)), visit_(visit), placed_(n, 0) {}

    void run() {
        const std::size_t k = model_.clique.size();
        const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        dfs(all);
    }

private:
    bool dfs(std::uint64_t remaining) {
        if (!remaining) return visit_(current_);
        VertexSet active = 0;
        if (!current_.order.empty()) {
            const VertexSet prev = model_.clique[current_.order.back()];
            for_each_vertex(prev, [&](Vertex v) {
                if (placed_[v] < model_.total[v]) active |= bit(v);
            });
        }
        for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
            const auto c = static_cast<std::size_t>(std::countr_zero(rest));
            if ((model_.clique[c] & active) != active) continue;
            const std::uint64_t after = remaining & ~(std::uint64_t{1} << c);
            if (!current_.order.empty()) {
                const auto head = current_.order.front();
                if (after && static_cast<std::size_t>(highest_index(after)) < head) continue;
                if (!after && c < head) continue;
            }
            current_.order.push_back(c);
            for_each_vertex(model_.clique[c], [&](Vertex v) { ++placed_[v]; });
            const bool go_on = dfs(after);
            for_each_vertex(model_.clique[c], [&](Vertex v) { --placed_[v]; });
            current_.order.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    CliqueModel model_;
    const std::function<bool(const CliqueOrdering&)>& visit_;
    std::vector<int> placed_;
    CliqueOrdering current_;
};

bool has_arrangement(const Graph& g) {
    auto cliques = maximal_cliques(g).masks();
    bool found = false;
    OrderingEnumerator(g.vertex_count(), cliques, [&](const CliqueOrdering&) {
        found = true;
        return false;
    }).run();
    return found;
}

}  // namespace

std::optional<std::string> interval_obstruction(const Graph& g) {
    if (!is_chordal(g)) return "chordless cycle";
    for (const auto& comp : connected_components(g)) {
        if (comp.size() <= 3) continue;
        if (!has_arrangement(g.induced(comp))) return "asteroidal triple";
    }
    return std::nullopt;
}

bool is_interval_graph(const Graph& g) { return !interval_obstruction(g).has_value(); }

void for_each_consecutive_ordering(const Graph& g, const CliqueSet& cliques,
                                   const std::function<bool(const CliqueOrdering&)>& visit) {
    OrderingEnumerator(g.vertex_count(), cliques.masks(), visit).run();
}

std::vector<CliqueOrdering> consecutive_orderings(const Graph& g) {
    std::vector<CliqueOrdering> out;
    if (!is_chordal(g)) return out;
    for_each_consecutive_ordering(g, maximal_cliques(g), [&](const CliqueOrdering& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

bool is_consecutive(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o) {
    if (o.order.size() != cliques.size()) return false;
    std::vector<bool> seen(cliques.size(), false);
    for (auto c : o.order) {
        if (c >= cliques.size() || seen[c]) return false;
        seen[c] = true;
    }
    const auto masks = cliques.masks();
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
        int state = 0;  // 0 before, 1 inside, 2 after
        for (auto c : o.order) {
            const bool in = (masks[c] & bit(v)) != 0;
            if (in && state == 2) return false;
            if (in) state = 1;
            if (!in && state == 1) state = 2;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Ranges, nesting and placement

std::vector<VertexRange> ranges(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<VertexRange> out(n, VertexRange{-1, -1});
    for (std::size_t pos = 0; pos < o.order.size(); ++pos) {
        for (Vertex v : cliques.cliques[o.order[pos]]) {
            if (out[v].first < 0) out[v].first = static_cast<int>(pos);
            out[v].last = static_cast<int>(pos);
        }
    }
    int next = static_cast<int>(o.order.size());
    for (Vertex v = 0; v < n; ++v) {
        if (out[v].first < 0) {
            out[v] = {next, next};
            ++next;
        }
    }
    return out;
}

std::vector<VertexRange> ranges(const Graph& g, const CliqueOrdering& o) {
    return ranges(g, maximal_cliques(g), o);
}

namespace {

ContainmentProfile finish_profile(std::vector<int> counts) {
    ContainmentProfile p;
    p.contained_count = std::move(counts);
    for (std::size_t v = 0; v < p.contained_count.size(); ++v) {
        if (p.argmax < 0 || p.contained_count[v] > p.max_count) {
            p.max_count = p.contained_count[v];
            p.argmax = static_cast<Vertex>(v);
        }
    }
    return p;
}

}  // namespace

ContainmentProfile nesting_profile(std::span<const VertexRange> rs, Objective objective) {
    std::vector<int> counts(rs.size(), 0);
    for (std::size_t v = 0; v < rs.size(); ++v) {
        for (std::size_t u = 0; u < rs.size(); ++u) {
            if (rs[v].first < rs[u].first && rs[u].last < rs[v].last) {
                ++counts[objective == Objective::impropriety ? v : u];
            }
        }
    }
    return finish_profile(std::move(counts));
}

ContainmentProfile forced_nesting(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o,
                                  Objective objective) {
    return nesting_profile(ranges(g, cliques, o), objective);
}

ContainmentProfile forced_nesting(const Graph& g, const CliqueOrdering& o, Objective objective) {
    return forced_nesting(g, maximal_cliques(g), o, objective);
}

IntervalRepresentation realize_ranges(std::span<const VertexRange> rs) {
    const auto n = static_cast<Vertex>(rs.size());
    int columns = 0;
    for (const auto& r : rs) columns = std::max(columns, r.last + 1);

    std::vector<std::vector<Vertex>> closing(columns), opening(columns);
    for (Vertex v = 0; v < n; ++v) {
        closing[rs[v].last].push_back(v);
        opening[rs[v].first].push_back(v);
    }
    IntervalRepresentation out;
    out.intervals.resize(n);
    std::int64_t coord = 0;
    // Gap g sits between column g and column g+1; gap -1 precedes column 0.
    for (int gap = -1; gap < columns; ++gap) {
        if (gap >= 0) {
            auto& close = closing[gap];
            std::sort(close.begin(), close.end(), [&](Vertex a, Vertex b) {
                return std::tie(rs[a].first, a) < std::tie(rs[b].first, b);
            });
            for (Vertex v : close) out.intervals[v].right = coord++;
        }
        if (gap + 1 < columns) {
            auto& open = opening[gap + 1];
            std::sort(open.begin(), open.end(), [&](Vertex a, Vertex b) {
                return std::tie(rs[a].last, a) < std::tie(rs[b].last, b);
            });
            for (Vertex v : open) out.intervals[v].left = coord++;
        }
    }
    return out;
}

IntervalRepresentation realize(const Graph& g, const CliqueSet& cliques, const CliqueOrdering& o) {
    return realize_ranges(ranges(g, cliques, o));
}

IntervalRepresentation realize(const Graph& g, const CliqueOrdering& o) {
    return realize(g, maximal_cliques(g), o);
}

void validate_representation(const IntervalRepresentation& r, const Graph* g) {
    std::vector<std::int64_t> ends;
    for (std::size_t v = 0; v < r.size(); ++v) {
        const auto& iv = r.intervals[v];
        if (!(iv.left < iv.right)) {
            throw InvalidRepresentation("interval " + std::to_string(v) + " has left >= right");
        }
        ends.push_back(iv.left);
        ends.push_back(iv.right);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
        throw InvalidRepresentation("endpoints are not pairwise distinct");
    }
    if (g) {
        if (g->vertex_count() != r.size()) {
            throw InvalidRepresentation("representation has " + std::to_string(r.size()) +
                                        " intervals for a graph on " + std::to_string(g->vertex_count()) +
                                        " vertices");
        }
        if (!(intersection_graph(r) == *g)) {
            throw InvalidRepresentation("intersection graph differs from the source graph");
        }
    }
}

Graph intersection_graph(const IntervalRepresentation& r) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < r.size(); ++u) {
        for (std::size_t v = u + 1; v < r.size(); ++v) {
            const auto& a = r.intervals[u];
            const auto& b = r.intervals[v];
            if (std::max(a.left, b.left) <= std::min(a.right, b.right)) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
    return Graph(r.size(), edges);
}

ContainmentProfile representation_profile(const IntervalRepresentation& r, Objective objective) {
    validate_representation(r);
    std::vector<int> counts(r.size(), 0);
    for (std::size_t v = 0; v < r.size(); ++v) {
        for (std::size_t u = 0; u < r.size(); ++u) {
            const auto& outer = r.intervals[v];
            const auto& inner = r.intervals[u];
            if (outer.left < inner.left && inner.right < outer.right) {
                ++counts[objective == Objective::impropriety ? v : u];
            }
        }
    }
    return finish_profile(std::move(counts));
}

ContainmentProfile representation_impropriety(const IntervalRepresentation& r) {
    return representation_profile(r, Objective::impropriety);
}

ContainmentProfile representation_impropriety(const IntervalRepresentation& r, const Graph& g) {
    validate_representation(r, &g);
    return representation_profile(r, Objective::impropriety);
}

// ---------------------------------------------------------------------------
// Branch-and-bound

namespace detail {

namespace {

class ComponentSearch {
public:
    ComponentSearch(const Graph& g, const std::vector<VertexSet>& cliques, const SearchOptions& options,
                    bool collect)
        : g_(g), model_(make_model(g.vertex_count(), cliques)), options_(options), collect_(collect) {
        const auto n = static_cast<Vertex>(g.vertex_count());
        dominated_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex u = 0; u < n; ++u) {
                if (u != v && (g.closed_neighbors(u) & ~g.closed_neighbors(v)) == 0) dominated_[v] |= bit(u);
            }
        }
    }

    ComponentResult run() {
        const std::size_t k = model_.clique.size();
        const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        State root;
        root.first.fill(-1);
        root.placed.fill(0);
        root.count.fill(0);
        dfs(root, 0, all, 0);
        if (best_ == INT_MAX) throw NotIntervalGraph("asteroidal triple");
        result_.value = best_;
        return result_;
    }

private:
    struct State {
        std::array<int, 64> first;
        std::array<int, 64> placed;
        std::array<int, 64> count;
        VertexSet started = 0;
    };

    void check_deadline() {
        if (options_.deadline && (result_.stats.nodes & 0x3ff) == 1 &&
            std::chrono::steady_clock::now() > *options_.deadline) {
            throw SearchAborted(best_ == INT_MAX ? std::nullopt : std::optional<int>(best_),
                                result_.stats.orderings_explored);
        }
    }

    VertexSet attaining(const State& s, int value) const {
        VertexSet out = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(g_.vertex_count()); ++v) {
            if (s.count[v] == value) out |= bit(v);
        }
        return out;
    }

    // Lower bound on the final objective: vertices u whose every clique
    // contains an open vertex v and that have not started yet will end up
    // strictly inside v, except those sharing v's last clique.
    int lookahead(const State& s, VertexSet open, std::uint64_t remaining) const {
        int lb = 0;
        for_each_vertex(open, [&](Vertex v) {
            const VertexSet fresh = dominated_[v] & ~s.started;
            if (!fresh) return;
            int share = 0;
            for (std::uint64_t rest = model_.member_of[v] & remaining; rest; rest &= rest - 1) {
                share = std::max(share, popcount(fresh & model_.clique[std::countr_zero(rest)]));
            }
            lb = std::max(lb, s.count[v] + popcount(fresh) - share);
        });
        return lb;
    }

    bool worse(int bound) const { return collect_ ? bound > best_ : bound >= best_; }

    void dfs(State& s, int depth, std::uint64_t remaining, int current) {
        ++result_.stats.nodes;
        check_deadline();
        if (!remaining) {
            ++result_.stats.orderings_explored;
            if (current < best_) {
                best_ = current;
                result_.order = order_;
                result_.maximizers = attaining(s, current);
            } else if (collect_ && current == best_) {
                result_.maximizers |= attaining(s, current);
            }
            return;
        }
        const VertexSet prev = depth > 0 ? model_.clique[order_.back()] : 0;
        VertexSet active = 0;
        for_each_vertex(prev, [&](Vertex v) {
            if (s.placed[v] < model_.total[v]) active |= bit(v);
        });

        for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
            const auto c = static_cast<std::size_t>(std::countr_zero(rest));
            const VertexSet members = model_.clique[c];
            if ((members & active) != active) {
                ++result_.stats.feasibility_prunes;
                continue;
            }
            const std::uint64_t after = remaining & ~(std::uint64_t{1} << c);
            if (depth > 0) {
                const auto head = order_.front();
                if ((after && static_cast<std::size_t>(highest_index(after)) < head) || (!after && c < head)) {
                    continue;
                }
            }

            State next = s;
            int value = current;
            // Vertices of the previous clique missing from c end at depth-1;
            // their containers are the members of c that started earlier.
            for_each_vertex(prev & ~members, [&](Vertex u) {
                VertexSet containers = 0;
                for_each_vertex(members & s.started, [&](Vertex v) {
                    if (s.first[v] < s.first[u]) containers |= bit(v);
                });
                if (options_.objective == Objective::impropriety) {
                    for_each_vertex(containers, [&](Vertex v) { value = std::max(value, ++next.count[v]); });
                } else {
                    next.count[u] = popcount(containers);
                    value = std::max(value, next.count[u]);
                }
            });
            for_each_vertex(members & ~s.started, [&](Vertex v) { next.first[v] = depth; });
            next.started |= members;
            VertexSet open = 0;
            for_each_vertex(members, [&](Vertex v) {
                if (++next.placed[v] < model_.total[v]) open |= bit(v);
            });

            int bound = value;
            if (options_.objective == Objective::impropriety && after) {
                bound = std::max(bound, lookahead(next, open, after));
            }
            if (worse(bound)) {
                ++result_.stats.bound_prunes;
                continue;
            }
            order_.push_back(c);
            dfs(next, depth + 1, after, value);
            order_.pop_back();
        }
    }

    const Graph& g_;
    CliqueModel model_;
    SearchOptions options_;
    bool collect_;
    std::vector<VertexSet> dominated_;
    int best_ = INT_MAX;
    std::vector<std::size_t> order_;
    ComponentResult result_;
};

}  // namespace

ComponentResult search_component(const Graph& comp, const std::vector<VertexSet>& cliques,
                                 const SearchOptions& options, bool collect_maximizers) {
    if (cliques.empty()) {
        ComponentResult r;
        r.maximizers = comp.all();
        r.stats.nodes = 1;
        r.stats.orderings_explored = 1;
        return r;
    }
    return ComponentSearch(comp, cliques, options, collect_maximizers).run();
}

}  // namespace detail

ImproprietyCertificate optimize(const Graph& g, const SearchOptions& options) {
    if (auto why = interval_obstruction(g)) throw NotIntervalGraph(*why);

    ImproprietyCertificate cert;
    cert.objective = options.objective;
    cert.witness.intervals.resize(g.vertex_count());
    std::int64_t offset = 0;
    for (const auto& members : connected_components(g)) {
        const Graph comp = g.induced(members);
        const CliqueSet cliques = maximal_cliques(comp);
        auto result = detail::search_component(comp, cliques.masks(), options, false);
        cert.value = std::max(cert.value, result.value);
        cert.stats += result.stats;

        const auto local = realize(comp, cliques, CliqueOrdering{result.order});
        std::int64_t width = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            cert.witness.intervals[members[i]] = {local.intervals[i].left + offset,
                                                  local.intervals[i].right + offset};
            width = std::max(width, local.intervals[i].right + 1);
        }
        offset += width;
    }
    cert.basepoint_witness = representation_profile(cert.witness, options.objective).argmax;
    return cert;
}

ImproprietyCertificate impropriety(const Graph& g) {
    return optimize(g, SearchOptions{Objective::impropriety, std::nullopt});
}

ImproprietyCertificate properness(const Graph& g) {
    return optimize(g, SearchOptions{Objective::properness, std::nullopt});
}

}  // namespace improper
