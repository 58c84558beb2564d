#pragma once

#include <cstddef>
#include <cstdint>

#include "improper/graph.hpp"
#include "improper/interval.hpp"

namespace improper {

inline constexpr std::size_t kOracleGuard = 8;

struct OracleResult {
    int value = 0;
    std::uint64_t sequences_examined = 0;  // complete endpoint sequences reached
};

// Brute force over every left-to-right sequence of the 2n interval endpoints
// whose intersection pattern is exactly G. Works directly on endpoints and
// never looks at cliques. Single-threaded.
// Throws GuardExceeded above 8 vertices, NotIntervalGraph when no sequence exists.
OracleResult oracle_optimum(const Graph& g, Objective objective);
int oracle_impropriety(const Graph& g);
int oracle_properness(const Graph& g);

}  // namespace improper
