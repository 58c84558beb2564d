#include <doctest.h>

#include "helpers.hpp"
#include "improper/errors.hpp"
#include "improper/families.hpp"
#include "improper/oracle.hpp"

using namespace improper;

TEST_CASE("hand-checked values") {
    CHECK(oracle_impropriety(testing::claw()) == 1);
    CHECK(oracle_properness(testing::claw()) == 1);
    CHECK(oracle_impropriety(testing::make(2, {{0, 1}})) == 0);
    CHECK(oracle_impropriety(Graph(0)) == 0);
    CHECK(oracle_impropriety(Graph(3)) == 0);
    // K_{1,4}: the centre must contain at least two of four disjoint leaves.
    CHECK(oracle_impropriety(gen_star(4)) == 2);
}

TEST_CASE("eight-vertex construction") {
    const auto inst = gen_fig2(2, 0);
    REQUIRE(inst.graph.vertex_count() == 8);
    CHECK(oracle_impropriety(inst.graph) == 2);
    CHECK(oracle_optimum(inst.graph, Objective::impropriety).sequences_examined > 0);
}

TEST_CASE("guards and domain errors") {
    CHECK_THROWS_AS(oracle_impropriety(gen_path(9)), GuardExceeded);
    CHECK_THROWS_AS(oracle_impropriety(testing::cycle(4)), NotIntervalGraph);
    CHECK_THROWS_AS(oracle_impropriety(testing::net()), NotIntervalGraph);
}
