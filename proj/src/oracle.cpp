#include "improper/oracle.hpp"

#include <algorithm>
#include <array>
#include <climits>

#include "improper/errors.hpp"

namespace improper {

namespace {

class EndpointSearch {
public:
    EndpointSearch(const Graph& g, Objective objective) : g_(g), objective_(objective) {
        n_ = static_cast<Vertex>(g.vertex_count());
        open_time_.fill(0);
        count_.fill(0);
    }

    OracleResult run() {
        if (n_ == 0) return {0, 1};
        step(0, 0, 0);
        if (best_ == INT_MAX) throw NotIntervalGraph("no endpoint sequence realizes the graph");
        return {best_, examined_};
    }

private:
    void step(VertexSet opened, VertexSet closed, int current) {
        if (best_ == 0) return;
        if (closed == g_.all()) {
            ++examined_;
            best_ = std::min(best_, current);
            return;
        }
        const VertexSet live = opened & ~closed;
        for (Vertex u = 0; u < n_; ++u) {
            if (opened & bit(u)) continue;
            // u overlaps everything open at the moment it starts.
            if ((live & ~g_.neighbors(u)) != 0) continue;
            open_time_[u] = clock_++;
            step(opened | bit(u), closed, current);
            --clock_;
        }
        for_each_vertex(live, [&](Vertex u) {
            // Any neighbour not yet started could never meet u.
            if ((g_.neighbors(u) & ~opened) != 0) return;
            const auto saved = count_;
            int value = current;
            int containers = 0;
            for_each_vertex(live & ~bit(u), [&](Vertex v) {
                if (open_time_[v] < open_time_[u]) {
                    ++containers;
                    if (objective_ == Objective::impropriety) value = std::max(value, ++count_[v]);
                }
            });
            if (objective_ == Objective::properness) value = std::max(value, containers);
            if (value < best_) step(opened, closed | bit(u), value);
            count_ = saved;
        });
    }

    const Graph& g_;
    Objective objective_;
    Vertex n_ = 0;
    std::array<int, 64> open_time_;
    std::array<int, 64> count_;
    int clock_ = 0;
    int best_ = INT_MAX;
    std::uint64_t examined_ = 0;
};

}  // namespace

OracleResult oracle_optimum(const Graph& g, Objective objective) {
    if (g.vertex_count() > kOracleGuard) {
        throw GuardExceeded("oracle: " + std::to_string(g.vertex_count()) + " vertices exceeds guard of " +
                            std::to_string(kOracleGuard));
    }
    return EndpointSearch(g, objective).run();
}

int oracle_impropriety(const Graph& g) { return oracle_optimum(g, Objective::impropriety).value; }

int oracle_properness(const Graph& g) { return oracle_optimum(g, Objective::properness).value; }

}  // namespace improper
