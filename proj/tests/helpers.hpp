#pragma once

#include <initializer_list>
#include <vector>

#include "improper/graph.hpp"

namespace testing {

inline improper::Graph make(std::size_t n, std::initializer_list<improper::Edge> edges) {
    return improper::Graph(n, std::vector<improper::Edge>(edges));
}

inline improper::Graph claw() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline improper::Graph cycle(int k) {
    std::vector<improper::Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return improper::Graph(static_cast<std::size_t>(k), e);
}
// Triangle with a pendant on each corner: chordal, not interval.
inline improper::Graph net() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

}  // namespace testing
