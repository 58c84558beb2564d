#include <doctest.h>

#include "helpers.hpp"
#include "improper/errors.hpp"
#include "improper/families.hpp"
#include "improper/oracle.hpp"

using namespace improper;

TEST_CASE("drop construction shape") {
    const auto inst = gen_fig2(3, 1);
    CHECK(inst.graph.vertex_count() == 9);
    CHECK(inst.labels[inst.designated_vertex] == "y1");
    CHECK(inst.labels[inst.constructed_basepoint] == "b");
    CHECK(inst.relocating.size() == 2);
    CHECK(inst.expected_impropriety == 3);
    CHECK(inst.expected_drop_value == 1);
    CHECK(is_interval_graph(inst.graph));
    CHECK_THROWS_AS(gen_fig2(3, 3), InvalidParameters);
    CHECK_THROWS_AS(gen_fig2(0, 0), InvalidParameters);
}

TEST_CASE("drop construction values against the oracle") {
    // fig2(2, n) has eight vertices.
    for (int n = 0; n <= 1; ++n) {
        const auto inst = gen_fig2(2, n);
        CHECK(oracle_impropriety(inst.graph) == 2);
        CHECK(oracle_impropriety(delete_vertex(inst.graph, inst.designated_vertex).graph) == n);
    }
}

TEST_CASE("half-drop construction") {
    const auto inst = gen_fig3(4, 2);
    CHECK(inst.graph.vertex_count() == 3 + 2 + 2 + 2);
    CHECK(inst.labels[inst.designated_vertex] == "D");
    CHECK_THROWS_AS(gen_fig3(4, 3), InvalidParameters);
    const auto small = gen_fig3(2, 1);
    REQUIRE(small.graph.vertex_count() <= 8);
    CHECK(oracle_impropriety(small.graph) == 2);
    CHECK(oracle_impropriety(delete_vertex(small.graph, small.designated_vertex).graph) == 1);
}

TEST_CASE("calibrated construction records its choice") {
    const auto inst = gen_fig4(3, 1);
    REQUIRE(inst.calibration);
    CHECK(inst.calibration->calibrated);
    CHECK(inst.calibration->reached_target);
    CHECK(inst.calibration->observed_impropriety == 3);
    const auto fixed = gen_fig4(3, 1, 0);
    REQUIRE(fixed.calibration);
    CHECK_FALSE(fixed.calibration->calibrated);
    CHECK(fixed.calibration->chosen_s == 0);
    CHECK_THROWS_AS(gen_fig4(3, 1, -1), InvalidParameters);
}

TEST_CASE("fifteen-vertex construction") {
    const auto inst = gen_fig5(8);
    CHECK(inst.graph.vertex_count() == 15);
    CHECK(inst.relocating.size() == 2);
    CHECK_THROWS_AS(gen_fig5(7), InvalidParameters);
}

TEST_CASE("q-proper obstruction") {
    // K_{q+1} joined to three independent vertices.
    const Graph g = gen_qproper_obstruction(2);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 3 + 9);
    for (int q = 0; q <= 2; ++q) {
        CAPTURE(q);
        CHECK(oracle_properness(gen_qproper_obstruction(q)) == q + 1);
    }
    CHECK(gen_qproper_obstruction(0) == testing::claw());
    CHECK(oracle_properness(gen_clique_leaf_claw(2)) == 1);
}

TEST_CASE("dispatch") {
    FamilyParams fp;
    fp.k = 4;
    CHECK(make_family("star", fp).graph.vertex_count() == 5);
    CHECK(make_family("path", fp).graph.edge_count() == 3);
    fp.p = 3;
    fp.n = 1;
    CHECK(make_family("fig2", fp).graph.vertex_count() == 9);
    CHECK_THROWS_AS(make_family("nope", fp), InvalidParameters);
}
