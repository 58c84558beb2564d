#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "improper/errors.hpp"
#include "improper/families.hpp"
#include "improper/structure.hpp"

using namespace improper;

TEST_CASE("claw: the centre is the only basepoint") {
    CHECK(basepoint_witnesses(testing::claw()) == std::vector<Vertex>{0});
    const auto comps = local_components(testing::claw(), 0);
    CHECK(comps.size() == 3);
    // Every leaf can be drawn past an end of the centre.
    const auto ext = exterior_components(testing::claw(), 0);
    CHECK(std::count(ext.begin(), ext.end(), true) == 3);
}

TEST_CASE("proper graphs have no basepoint") {
    CHECK_THROWS_AS(basepoint_witnesses(gen_clique(4)), EmptyForProper);
    CHECK(analyze_structure(gen_path(5)).basepoint_witnesses.empty());
    CHECK_THROWS_AS(basepoint_witnesses(testing::cycle(4)), NotIntervalGraph);
}

TEST_CASE("drop construction: two exterior components around b") {
    for (int p = 2; p <= 5; ++p) {
        for (int n = 0; n < p; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            const auto inst = gen_fig2(p, n);
            const auto st = analyze_structure(inst.graph);
            CHECK(st.impropriety == p);
            REQUIRE(st.basepoint_witnesses == std::vector<Vertex>{inst.constructed_basepoint});
            const auto& a = st.per_basepoint.front();
            REQUIRE(a.local_components.size() == 3);
            CHECK(a.exterior_count() == 2);
            for (std::size_t i = 0; i < a.local_components.size(); ++i) {
                const bool relocating = a.local_components[i] == inst.relocating;
                CHECK(a.exterior[i] == !relocating);
            }
        }
    }
}

TEST_CASE("side components depend on the representation") {
    const auto inst = gen_fig2(3, 1);
    const auto cert = impropriety(inst.graph);
    const Vertex b = inst.constructed_basepoint;
    const auto view = side_components(cert.witness, inst.graph, b);
    CHECK(view.components.size() == 3);
    // The x-block and the y-block always leave b; the clique never does.
    CHECK(view.side_components.size() == 2);
    for (std::size_t i : view.side_components) CHECK(view.components[i] != inst.relocating);
}

TEST_CASE("components outside the basepoint's component are exterior") {
    const Graph g = disjoint_union(testing::claw(), gen_path(2));
    const auto comps = local_components(g, 0);
    REQUIRE(comps.size() == 4);
    const auto ext = exterior_components(g, 0);
    CHECK(ext.back());
    CHECK_THROWS_AS(local_components(g, 6), GraphError);
}
