#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "improper/errors.hpp"
#include "improper/families.hpp"
#include "improper/oracle.hpp"
#include "improper/spectrum.hpp"
#include "improper/suites.hpp"

using namespace improper;

TEST_CASE("claw spectrum") {
    const auto r = removal_spectrum(testing::claw());
    CHECK(r.graph_key == "Cs");
    CHECK(r.impropriety == 1);
    CHECK(r.spectrum == std::vector<int>{0});
    CHECK(r.critical == true);
    CHECK(r.disconnecting_deletion);
    CHECK(spectrum_invariant_violations(r).empty());
    CHECK(is_critical(testing::claw()));
}

TEST_CASE("cliques have no criticality") {
    const auto r = removal_spectrum(gen_clique(5));
    CHECK(r.impropriety == 0);
    CHECK(r.spectrum == std::vector<int>{0});
    CHECK_FALSE(r.critical.has_value());
    CHECK_THROWS_AS(is_critical(gen_clique(5)), ZeroImpropriety);
    CHECK_THROWS_AS(removal_spectrum(testing::cycle(4)), NotIntervalGraph);
}

TEST_CASE("K_{1,4} against the oracle") {
    const Graph g = gen_star(4);
    const auto r = removal_spectrum(g);
    CHECK(r.impropriety == oracle_impropriety(g));
    for (const auto& [v, value] : r.per_vertex) {
        CHECK(value == oracle_impropriety(delete_vertex(g, v).graph));
    }
    // Deleting a leaf leaves a claw.
    CHECK(r.critical == true);
    CHECK(r.spectrum == std::vector<int>{0, 1});
}

TEST_CASE("designated deletion lands on n") {
    const auto inst = gen_fig2(3, 1);
    const auto r = removal_spectrum(inst.graph);
    CHECK(r.per_vertex[inst.designated_vertex].second == 1);
    const auto with_workers = removal_spectrum(inst.graph, LabOptions{Objective::impropriety, 4, std::nullopt});
    CHECK(with_workers.per_vertex == r.per_vertex);
}

TEST_CASE("properness criticality of the obstruction") {
    CHECK(is_critical(gen_qproper_obstruction(2), Objective::properness));
    LabOptions opts;
    opts.objective = Objective::properness;
    const auto r = removal_spectrum(gen_qproper_obstruction(2), opts);
    CHECK(r.impropriety == 3);
    CHECK(r.spectrum == std::vector<int>{0, 2});
}

TEST_CASE("invariant checker flags tampered reports") {
    auto r = removal_spectrum(gen_star(4));
    r.spectrum.push_back(7);
    CHECK_FALSE(spectrum_invariant_violations(r).empty());
    r = removal_spectrum(gen_star(4));
    r.critical = false;
    CHECK_FALSE(spectrum_invariant_violations(r).empty());
    r = removal_spectrum(gen_star(4));
    r.per_vertex[0].second = 5;
    CHECK_FALSE(spectrum_invariant_violations(r).empty());
}

TEST_CASE("verification table output") {
    VerificationTable t;
    t.suite = "demo";
    TableRow row;
    row.subject = "a";
    row.data["x"] = 1;
    row.status = RowStatus::finding;
    row.note = "n";
    t.rows.push_back(row);
    t.notes.push_back("note");
    CHECK(t.passed());
    const auto j = to_json(t);
    CHECK(j["counts"]["FINDING"] == 1);
    CHECK(j["rows"][0]["status"] == "FINDING");
    const std::string md = to_markdown(t);
    CHECK(md.find("| a | FINDING | x=1 | n |") != std::string::npos);
    CHECK(md.find("- note") != std::string::npos);
    t.rows[0].status = RowStatus::fail;
    CHECK_FALSE(t.passed());
}

TEST_CASE("family claims") {
    const auto t = verify_family_claims("fig2", family_grid("fig2", 2, 3));
    CHECK(t.rows.size() == 2 + 3);
    CHECK(t.passed());
    CHECK(t.rows[0].data["oracle_impropriety"] == 2);
    const auto t5 = verify_family_claims("fig5", family_grid("fig5", 8, 8));
    REQUIRE(t5.rows.size() == 1);
    CHECK(t5.rows[0].status == RowStatus::pass);
    CHECK_THROWS_AS(verify_family_claims("star", {}), InvalidParameters);
}

TEST_CASE("class spectrum") {
    const Corpus small = builtin_corpus(6, false);
    const auto r1 = class_spectrum(1, small);
    CHECK(r1.union_spectrum == std::vector<int>{0});
    CHECK(r1.witnesses.at(0) == "Cs");
    const auto r2 = class_spectrum(2, small);
    CHECK(r2.union_spectrum == std::vector<int>{0, 1});
    for (int p = 1; p <= 3; ++p) {
        const auto r = class_spectrum(p, small);
        for (int v : r.union_spectrum) CHECK(v <= p - 1);
    }
}

TEST_CASE("class spectrum for p = 2 over all graphs on <= 8 vertices") {
    const auto r = class_spectrum(2, builtin_corpus(8, false), 2);
    CHECK(r.union_spectrum == std::vector<int>{0, 1});
    CHECK(r.critical_found == 11);
}

TEST_CASE("graph6 corpus ingestion") {
    std::istringstream in("# header\nCs\n\nD~{\n");
    const Corpus c = read_graph6_corpus(in, "inline");
    CHECK(c.graphs.size() == 2);
    CHECK(c.names[1] == "D~{");
    std::istringstream bad("Cs\nC\n");
    CHECK_THROWS_AS(read_graph6_corpus(bad, "bad"), ParseError);
}

TEST_CASE("theorem scan filters by hypothesis") {
    // A claw's centre has three exterior components: no row.
    Corpus c;
    c.graphs = {testing::claw(), gen_fig2(2, 0).graph};
    c.names = {"claw", "fig2"};
    const auto t = theorem32_scan(c, false);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].subject == "fig2");
    CHECK(t.rows[0].data["exterior_all_p2"] == false);
}

TEST_CASE("q-proper stability") {
    CHECK(qproper_stability(0).rows.empty());
    const auto t = qproper_stability(2, 6);
    CHECK(t.passed());
    CHECK_FALSE(t.rows.empty());
}

TEST_CASE("suites") {
    CHECK(suite_names().size() == 9);
    CHECK_THROWS_AS(run_suite("nope"), InvalidParameters);
    SuiteOptions o;
    o.nmax = 5;
    CHECK(run_suite("oracle-equivalence", o).passed());
    o.nmax = 9;
    CHECK_THROWS_AS(run_suite("oracle-equivalence", o), InvalidParameters);
}
