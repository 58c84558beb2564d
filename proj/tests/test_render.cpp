#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "improper/errors.hpp"
#include "improper/families.hpp"
#include "improper/json_io.hpp"
#include "improper/render.hpp"

using namespace improper;

TEST_CASE("row assignment") {
    IntervalRepresentation r{{{0, 10}, {1, 2}, {3, 4}, {5, 6}}};
    CHECK(assign_rows(r) == std::vector<int>{0, 1, 1, 1});
    IntervalRepresentation chain{{{0, 3}, {1, 4}, {2, 5}}};
    CHECK(assign_rows(chain) == std::vector<int>{0, 1, 2});
}

TEST_CASE("svg and tikz round trips") {
    for (const auto& inst : {gen_fig2(3, 1), gen_fig3(4, 2), gen_fig5(8)}) {
        const auto cert = impropriety(inst.graph);
        RenderStyle style;
        style.basepoint = cert.basepoint_witness;
        style.designated = inst.designated_vertex;
        style.relocating = inst.relocating;
        style.labels = inst.labels;
        CHECK(intersection_graph(parse_rendered(render_svg(cert.witness, style))) == inst.graph);
        CHECK(intersection_graph(parse_rendered(render_tikz(cert.witness, style))) == inst.graph);
    }
}

TEST_CASE("styling") {
    const auto cert = impropriety(testing::claw());
    RenderStyle style;
    style.basepoint = 0;
    style.designated = 1;
    style.labels = {"c", "a&b", "l2", "l3"};
    const std::string svg = render_svg(cert.witness, style);
    CHECK(svg.find("data-vertex=\"0\"") != std::string::npos);
    CHECK(svg.find("stroke=\"#000000\"") != std::string::npos);
    CHECK(svg.find("stroke=\"#555555\"") != std::string::npos);
    CHECK(svg.find("a&amp;b") != std::string::npos);
    const std::string tikz = render_tikz(cert.witness, style);
    CHECK(tikz.rfind("\\documentclass", 0) == 0);
    CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.find("\\end{document}") != std::string::npos);
    CHECK(tikz.find("a\\&b") != std::string::npos);
    CHECK(tikz.find("% v=3") != std::string::npos);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_rendered("hello"), InvalidRepresentation);
    CHECK_THROWS_AS(parse_rendered("<svg><line data-vertex=\"1\" x1=\"0\" y1=\"0\" x2=\"5\"/></svg>"),
                    InvalidRepresentation);
}

TEST_CASE("representation json round trip") {
    IntervalRepresentation r{{{0, 3}, {1, 2}}};
    const Json j = to_json(r);
    CHECK(j.dump() == R"({"n":2,"intervals":[[0,3],[1,2]]})");
    CHECK(representation_from_json(j).intervals.size() == 2);
    CHECK(representation_from_json(j).intervals[1].right == 2);
    CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"n":3,"intervals":[[0,1]]})")), InvalidRepresentation);
    CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"intervals":[[0]]})")), InvalidRepresentation);
}

TEST_CASE("sidecar carries the claims") {
    const Json j = family_sidecar(gen_fig2(3, 1));
    CHECK(j["vertices"] == 9);
    CHECK(j["expected_imp"] == 3);
    CHECK(j["expected_drop"] == 1);
    CHECK(j["labels"][j["designated_vertex"].get<int>()] == "y1");
}
