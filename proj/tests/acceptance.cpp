// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. argv[1] is the path of the improper CLI.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "improper/canonical.hpp"
#include "improper/explorer.hpp"
#include "improper/families.hpp"
#include "improper/graph_io.hpp"
#include "improper/oracle.hpp"
#include "improper/render.hpp"
#include "improper/spectrum.hpp"
#include "improper/suites.hpp"

using namespace improper;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string cli;
fs::path workdir;
std::vector<SpectrumReport> seen_reports;  // everything criterion 3 audits

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string& args, const fs::path& stdout_file) {
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + stdout_file.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string p_n(int p, int n) { return "(" + std::to_string(p) + "," + std::to_string(n) + ")"; }

// ---------------------------------------------------------------------------

Outcome c1_oracle_equivalence() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& g : enumerate_graphs_up_to(6)) {
        if (!is_interval_graph(g)) continue;
        ++checked;
        o.require(impropriety(g).value == oracle_impropriety(g), "impropriety mismatch on " + canonical_form(g));
        o.require(properness(g).value == oracle_properness(g), "properness mismatch on " + canonical_form(g));
    }
    if (o.ok) o.detail = std::to_string(checked) + " interval graphs on <= 6 vertices, both objectives";
    return o;
}

Outcome family_drop(const std::string& tag, int pmax, bool full_n) {
    Outcome o;
    std::size_t instances = 0, oracle_checked = 0;
    for (int p = 2; p <= pmax; ++p) {
        const int nmax = full_n ? p - 1 : p / 2;
        for (int n = 0; n <= nmax; ++n) {
            const auto inst = tag == "fig2" ? gen_fig2(p, n) : gen_fig3(p, n);
            const auto spec = removal_spectrum(inst.graph);
            seen_reports.push_back(spec);
            ++instances;
            o.require(spec.impropriety == p, tag + p_n(p, n) + " impropriety " + std::to_string(spec.impropriety));
            const int drop = spec.per_vertex[inst.designated_vertex].second;
            o.require(drop == n, tag + p_n(p, n) + " drop " + std::to_string(drop));
            if (inst.graph.vertex_count() <= kOracleGuard) {
                ++oracle_checked;
                o.require(oracle_impropriety(inst.graph) == p, tag + p_n(p, n) + " oracle disagrees");
                o.require(oracle_impropriety(delete_vertex(inst.graph, inst.designated_vertex).graph) == n,
                          tag + p_n(p, n) + " oracle drop disagrees");
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(instances) + " instances, " + std::to_string(oracle_checked) + " oracle-checked";
    }
    return o;
}

Outcome c5_fig5() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto inst = gen_fig5(8);
    const int imp = impropriety(inst.graph).value;
    const double t_imp = seconds_since(t0);
    const auto spec = removal_spectrum(inst.graph);
    seen_reports.push_back(spec);
    o.require(imp == 8, "fig5(8) impropriety " + std::to_string(imp));
    o.require(spec.per_vertex[inst.designated_vertex].second == 7, "deleting D does not give 7");
    o.require(t_imp < 60.0, "engine took " + std::to_string(t_imp) + " s");
    std::string findings;
    for (int p : {9, 10}) {
        const auto big = gen_fig5(p);
        const auto s = removal_spectrum(big.graph);
        seen_reports.push_back(s);
        findings += " p=" + std::to_string(p) + ":imp=" + std::to_string(s.impropriety) +
                    ",drop=" + std::to_string(s.per_vertex[big.designated_vertex].second);
    }
    if (o.ok) o.detail = "imp 8, drop 7;" + findings + " (reported)";
    return o;
}

Outcome c6_qproper() {
    Outcome o;
    std::size_t rows = 0;
    for (int q = 1; q <= 3; ++q) {
        const auto t = qproper_stability(q, 7);
        rows += t.rows.size();
        o.require(!t.rows.empty(), "q=" + std::to_string(q) + " found no critical graphs");
        for (const auto& r : t.rows) o.require(r.status == RowStatus::pass, "q=" + std::to_string(q) + " " + r.subject);
    }
    if (o.ok) o.detail = std::to_string(rows) + " critical exactly-q-proper graphs, q = 1..3";
    return o;
}

Outcome c7_thm32() {
    Outcome o;
    const auto t = theorem32_scan(family_corpus("fig2", family_grid("fig2", 1, 6)), true);
    std::size_t violations = 0;
    std::string first;
    for (const auto& r : t.rows) {
        if (r.status == RowStatus::fail) {
            if (!violations) first = r.subject + " spectrum " + r.data["spectrum"].dump();
            ++violations;
        }
    }
    o.require(violations == 0, std::to_string(violations) + " of " + std::to_string(t.rows.size()) +
                                   " scanned instances have |spectrum| > 4, first " + first);
    if (o.ok) o.detail = std::to_string(t.rows.size()) + " instances, no violations";
    return o;
}

Outcome c8_properties() {
    Outcome o;
    SuiteOptions opts;
    opts.nmax = 7;
    const auto t = run_suite("properties", opts);
    for (const auto& r : t.rows) o.require(r.status == RowStatus::pass, r.subject + " " + r.data.dump());
    if (o.ok) o.detail = std::to_string(t.rows.size()) + " properties hold";
    return o;
}

Outcome c9_determinism() {
    Outcome o;
    const fs::path a = workdir / "mainthm_w1.json", b = workdir / "mainthm_w4.json";
    const int ra = run("verify mainthm --pmax 5 --workers 1 --output \"" + (workdir / "w1").string() + "\"", a);
    const int rb = run("verify mainthm --pmax 5 --workers 4 --output \"" + (workdir / "w4").string() + "\"", b);
    o.require(ra == 0 && rb == 0, "verify exit codes " + std::to_string(ra) + ", " + std::to_string(rb));
    o.require(!slurp(a).empty() && slurp(a) == slurp(b), "stdout reports differ");
    o.require(slurp(workdir / "w1" / "mainthm.md") == slurp(workdir / "w4" / "mainthm.md"), "markdown reports differ");

    const fs::path fresh = workdir / "fresh.jsonl", crashed = workdir / "crashed.jsonl";
    fs::remove(fresh);
    fs::remove(crashed);
    const fs::path sink = workdir / "explore.out";
    o.require(run("explore --nmax 6 --store \"" + fresh.string() + "\"", sink) == 0, "fresh explore failed");
    o.require(run("explore --nmax 6 --workers 4 --stop-after 70 --store \"" + crashed.string() + "\"", sink) == 0,
              "interrupted explore failed");
    fs::resize_file(crashed, fs::file_size(crashed) - 25);
    o.require(run("explore --nmax 6 --workers 2 --store \"" + crashed.string() + "\"", sink) == 0, "resume failed");
    o.require(slurp(fresh) == slurp(crashed), "resumed store differs");
    if (o.ok) o.detail = "verify reports identical at 1 and 4 workers; resumed store identical";
    return o;
}

Outcome c10_round_trips() {
    Outcome o;
    std::size_t graphs = 0;
    for (const auto& g : enumerate_graphs_up_to(8)) {
        ++graphs;
        const std::string g6 = to_graph6(g);
        o.require(from_graph6(g6) == g, "graph6 parse(emit) on " + g6);
        o.require(to_graph6(from_graph6(g6)) == g6, "graph6 emit(parse) on " + g6);
        const std::string el = to_edge_list(g);
        o.require(from_edge_list(el) == g, "edge list parse(emit) on " + g6);
        o.require(to_edge_list(from_edge_list(el)) == el, "edge list emit(parse) on " + g6);
    }
    std::vector<FamilyInstance> grid;
    for (int p = 2; p <= 6; ++p) {
        for (int n = 0; n < p; ++n) grid.push_back(gen_fig2(p, n));
        for (int n = 0; n <= p / 2; ++n) grid.push_back(gen_fig3(p, n));
        for (int n = 0; n < p; ++n) grid.push_back(gen_fig4(p, n));
    }
    for (int p = 8; p <= 10; ++p) grid.push_back(gen_fig5(p));
    for (const auto& inst : grid) {
        const auto cert = impropriety(inst.graph);
        RenderStyle style;
        style.basepoint = cert.basepoint_witness;
        style.designated = inst.designated_vertex;
        style.relocating = inst.relocating;
        style.labels = inst.labels;
        o.require(intersection_graph(parse_rendered(render_svg(cert.witness, style))) == inst.graph,
                  "svg round trip " + inst.family_tag);
        o.require(intersection_graph(parse_rendered(render_tikz(cert.witness, style))) == inst.graph,
                  "tikz round trip " + inst.family_tag);
    }
    if (o.ok) {
        o.detail = std::to_string(graphs) + " graphs on <= 8 vertices; " + std::to_string(grid.size()) +
                   " rendered instances";
    }
    return o;
}

Outcome c11_performance() {
    Outcome o;
    auto t0 = Clock::now();
    const int imp = impropriety(gen_fig5(8).graph).value;
    const double t_fig5 = seconds_since(t0);
    o.require(imp == 8 && t_fig5 < 60.0, "fig5(8) took " + std::to_string(t_fig5) + " s");

    t0 = Clock::now();
    ExploreOptions e;
    e.max_n = 7;
    e.store = workdir / "connected7.jsonl";
    fs::remove(e.store);
    const auto r = explore(e);
    const double t_explore = seconds_since(t0);
    o.require(r.records == 1 + 1 + 2 + 6 + 21 + 112 + 853, "explorer stored " + std::to_string(r.records));
    o.require(t_explore < 30 * 60.0, "explorer took " + std::to_string(t_explore) + " s");
    if (o.ok) {
        std::ostringstream d;
        d.precision(3);
        d << "fig5(8) " << t_fig5 << " s (limit 60); explorer <= 7 " << t_explore << " s (limit 1800)";
        o.detail = d.str();
    }
    return o;
}

// Runs last: audits every report produced above plus the explorer store.
Outcome c3_subset() {
    Outcome o;
    std::size_t critical = 0, audited = 0;
    for (const auto& r : seen_reports) {
        ++audited;
        const auto broken = spectrum_invariant_violations(r);
        o.require(broken.empty(), "invariant: " + (broken.empty() ? "" : broken.front()));
        if (r.critical.value_or(false)) {
            ++critical;
            o.require(r.spectrum.back() <= r.impropriety - 1, "critical spectrum exceeds imp-1");
        }
    }
    for (const auto& rec : read_store(workdir / "connected7.jsonl").records) {
        if (!rec["interval"].get<bool>()) continue;
        ++audited;
        for (const auto& note : rec["notes"]) {
            o.require(note.get<std::string>().rfind("invariant", 0) != 0, rec["key"].get<std::string>() + " " + note.get<std::string>());
        }
        if (rec["critical"].is_boolean() && rec["critical"].get<bool>()) {
            ++critical;
            const int imp = rec["imp"].get<int>();
            for (const auto& v : rec["spectrum"]) o.require(v.get<int>() >= 0 && v.get<int>() <= imp - 1, rec["key"].get<std::string>());
        }
    }
    for (int p = 1; p <= 4; ++p) {
        const auto cs = class_spectrum(p, builtin_corpus(7, false));
        for (int v : cs.union_spectrum) o.require(v <= p - 1, "class spectrum p=" + std::to_string(p));
    }
    if (o.ok) {
        o.detail = std::to_string(audited) + " reports audited, " + std::to_string(critical) + " critical";
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-improper-cli>\n";
        return 2;
    }
    cli = argv[1];
    workdir = fs::temp_directory_path() / "improper_acceptance";
    fs::create_directories(workdir);

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle-engine equivalence", c1_oracle_equivalence},
        {2, "drop to any n below p", [] { return family_drop("fig2", 6, true); }},
        {4, "half-drop construction", [] { return family_drop("fig3", 6, false); }},
        {5, "fifteen-vertex drop to 7", c5_fig5},
        {6, "q-proper stability", c6_qproper},
        {7, "two exterior components bound the spectrum", c7_thm32},
        {8, "property suites", c8_properties},
        {9, "determinism", c9_determinism},
        {10, "round trips", c10_round_trips},
        {11, "performance floor", c11_performance},
        {3, "critical spectra stay below imp", c3_subset},
    };

    std::vector<std::pair<int, std::string>> lines;
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.check();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        failures += !out.ok;
        std::ostringstream line;
        line.precision(3);
        line << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | " << out.detail << " ["
             << seconds_since(t0) << " s]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures ? std::to_string(failures) + " criterion failing" : "all criteria pass") << std::endl;
    return failures;
}
