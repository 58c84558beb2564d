#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "improper/canonical.hpp"
#include "improper/errors.hpp"
#include "improper/explorer.hpp"
#include "improper/families.hpp"
#include "improper/graph_io.hpp"
#include "improper/json_io.hpp"
#include "improper/oracle.hpp"
#include "improper/render.hpp"
#include "improper/spectrum.hpp"
#include "improper/structure.hpp"
#include "improper/suites.hpp"

namespace fs = std::filesystem;
using namespace improper;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kGuard = 3 };

// Raised for usage problems detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    std::string output;
    std::string format;
    std::string family;
    std::optional<int> p, n, q, k, s;
    std::optional<int> pmax, nmax;
    unsigned workers = 1;
    std::optional<double> time_budget;
    std::string store;
    std::uint64_t seed = 0;
    std::size_t max_vertices = kMaxVertices;
    std::string objective = "impropriety";
    std::string suite;
    std::optional<std::size_t> stop_after;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return read_all(in);
}

void write_output(const Config& c, const std::string& text) {
    if (c.output.empty() || c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + c.output);
    out << text;
}

bool is_json_document(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

FamilyParams family_params(const Config& c) {
    FamilyParams fp;
    fp.p = c.p.value_or(0);
    fp.n = c.n.value_or(0);
    fp.s = c.s;
    fp.q = c.q.value_or(0);
    fp.k = c.k.value_or(0);
    return fp;
}

struct Loaded {
    Graph graph;
    std::optional<FamilyInstance> family;
    std::optional<IntervalRepresentation> representation;
};

Loaded load(const Config& c) {
    Loaded l;
    if (!c.family.empty()) {
        if (!c.input.empty()) throw UsageError("give either --input or --family, not both");
        l.family = make_family(c.family, family_params(c));
        l.graph = l.family->graph;
    } else if (!c.input.empty()) {
        const std::string text = read_input(c.input);
        if (is_json_document(text)) {
            Json j;
            try {
                j = Json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw InvalidRepresentation(e.what());
            }
            l.representation = representation_from_json(j);
            l.graph = intersection_graph(*l.representation);
        } else {
            l.graph = parse_graph(text);
        }
    } else {
        throw UsageError("an input graph is required (--input PATH|- or --family TAG)");
    }
    if (l.graph.vertex_count() > c.max_vertices) {
        throw GuardExceeded("graph has " + std::to_string(l.graph.vertex_count()) + " vertices, guard is " +
                            std::to_string(c.max_vertices));
    }
    return l;
}

std::optional<std::chrono::steady_clock::time_point> deadline(const Config& c) {
    if (!c.time_budget) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*c.time_budget));
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string colorize(std::string text) {
    if (!use_color()) return text;
    const std::pair<const char*, const char*> marks[] = {
        {"| PASS |", "| \033[32mPASS\033[0m |"},
        {"| FAIL |", "| \033[31mFAIL\033[0m |"},
        {"| FINDING |", "| \033[33mFINDING\033[0m |"},
    };
    for (const auto& [plain, colored] : marks) {
        for (auto pos = text.find(plain); pos != std::string::npos; pos = text.find(plain, pos + 1)) {
            text.replace(pos, std::string(plain).size(), colored);
        }
    }
    return text;
}

Objective parse_objective(const std::string& s) {
    if (s == "impropriety") return Objective::impropriety;
    if (s == "properness") return Objective::properness;
    throw UsageError("unknown objective '" + s + "'");
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Config& c) {
    const Loaded l = load(c);
    const Graph& g = l.graph;
    if (auto why = interval_obstruction(g)) throw NotIntervalGraph(*why);

    SearchOptions opts;
    opts.deadline = deadline(c);
    const auto imp = optimize(g, opts);
    opts.objective = Objective::properness;
    const auto prop = optimize(g, opts);
    LabOptions lab;
    lab.workers = c.workers;
    lab.deadline = opts.deadline;
    const auto spec = removal_spectrum(g, lab);
    const auto structure = analyze_structure(g);

    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["key"] = spec.graph_key;
    j["interval"] = true;
    j["imp"] = imp.value;
    j["proper"] = prop.value;
    j["spectrum"] = spec.spectrum;
    Json pv = Json::array();
    for (const auto& [v, value] : spec.per_vertex) pv.push_back({v, value});
    j["per_vertex"] = std::move(pv);
    j["critical"] = spec.critical ? Json(*spec.critical) : Json();
    j["disconnecting_deletion"] = spec.disconnecting_deletion;
    j["basepoint_witnesses"] = structure.basepoint_witnesses;
    j["exterior"] = to_json(structure)["per_basepoint"];
    j["certificate"] = to_json(imp);
    j["properness_certificate"] = to_json(prop);

    if (c.format == "table") {
        std::ostringstream out;
        out << "| field | value |\n|---|---|\n";
        for (const char* key : {"n", "m", "key", "imp", "proper", "spectrum", "critical", "basepoint_witnesses"}) {
            out << "| " << key << " | " << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << " |\n";
        }
        write_output(c, out.str());
    } else {
        write_output(c, j.dump(2) + "\n");
    }
    return kOk;
}

int cmd_generate(const Config& c) {
    if (c.family.empty()) throw UsageError("generate needs a family tag");
    const FamilyInstance inst = make_family(c.family, family_params(c));
    std::string text;
    const std::string fmt = c.format.empty() ? "edgelist" : c.format;
    if (fmt == "edgelist") {
        text = to_edge_list(inst.graph);
    } else if (fmt == "g6") {
        text = to_graph6(inst.graph) + "\n";
    } else if (fmt == "dot") {
        text = to_dot(inst.graph);
    } else if (fmt == "json") {
        text = family_sidecar(inst).dump(2) + "\n";
    } else {
        throw UsageError("generate: unsupported format '" + fmt + "'");
    }
    write_output(c, text);
    if (!c.output.empty() && c.output != "-" && fmt != "json") {
        std::ofstream side(c.output + ".json", std::ios::binary | std::ios::trunc);
        side << family_sidecar(inst).dump(2) << "\n";
    }
    return kOk;
}

int cmd_verify(const Config& c) {
    SuiteOptions o;
    o.p = c.p;
    o.pmax = c.pmax;
    o.nmax = c.nmax;
    o.q = c.q;
    o.workers = c.workers;
    o.seed = c.seed;
    const auto table = run_suite(c.suite, o);
    const std::string json = to_json(table).dump(2) + "\n";
    const std::string md = to_markdown(table);
    if (!c.output.empty() && c.output != "-") {
        fs::create_directories(c.output);
        std::ofstream(fs::path(c.output) / (c.suite + ".json"), std::ios::binary | std::ios::trunc) << json;
        std::ofstream(fs::path(c.output) / (c.suite + ".md"), std::ios::binary | std::ios::trunc) << md;
    }
    std::cout << (c.format == "table" ? colorize(md) : json);
    return table.passed() ? kOk : kUsage;
}

int cmd_explore(const Config& c) {
    if (c.store.empty()) throw UsageError("explore needs --store PATH");
    ExploreOptions o;
    o.max_n = static_cast<std::size_t>(c.nmax.value_or(7));
    o.store = c.store;
    o.workers = c.workers;
    o.stop_after = c.stop_after;
    if (!c.input.empty()) {
        std::istringstream in(read_input(c.input));
        o.corpus = read_graph6_corpus(in, c.input);
    }
    const auto r = explore(o);
    for (const auto& bad : r.corrupt) {
        std::cerr << "corrupt store line at byte " << bad.offset << ": " << bad.reason << "\n";
    }
    Json j;
    j["store"] = c.store;
    j["candidates"] = r.candidates;
    j["skipped"] = r.skipped;
    j["appended"] = r.appended;
    j["records"] = r.records;
    j["corrupt_lines"] = r.corrupt.size();
    j["finalized"] = r.finalized;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_stats(const Config& c) {
    if (c.store.empty()) throw UsageError("stats needs --store PATH");
    if (!fs::exists(c.store)) throw UsageError("no store at " + c.store);
    const auto contents = read_store(c.store);
    for (const auto& bad : contents.corrupt) {
        std::cerr << "corrupt store line at byte " << bad.offset << ": " << bad.reason << "\n";
    }
    write_output(c, conjecture_stats(contents).dump(2) + "\n");
    return kOk;
}

int cmd_render(const Config& c) {
    const Loaded l = load(c);
    RenderStyle style;
    IntervalRepresentation rep;
    if (l.representation) {
        rep = *l.representation;
        if (is_interval_graph(l.graph) && impropriety(l.graph).value > 0) {
            style.basepoint = static_cast<Vertex>(representation_impropriety(rep).argmax);
        }
    } else {
        if (auto why = interval_obstruction(l.graph)) throw NotIntervalGraph(*why);
        SearchOptions opts;
        opts.deadline = deadline(c);
        const auto cert = optimize(l.graph, opts);
        rep = cert.witness;
        if (cert.value > 0) style.basepoint = cert.basepoint_witness;
    }
    if (style.basepoint) {
        const auto view = side_components(rep, l.graph, *style.basepoint);
        for (std::size_t i : view.side_components) {
            style.side.insert(style.side.end(), view.components[i].begin(), view.components[i].end());
        }
    }
    if (l.family) {
        style.labels = l.family->labels;
        if (l.family->family_tag.rfind("fig", 0) == 0) style.designated = l.family->designated_vertex;
        style.relocating = l.family->relocating;
    }
    const std::string fmt = c.format.empty() ? "svg" : c.format;
    if (fmt == "svg") {
        write_output(c, render_svg(rep, style));
    } else if (fmt == "tikz") {
        write_output(c, render_tikz(rep, style));
    } else {
        throw UsageError("render: unsupported format '" + fmt + "'");
    }
    return kOk;
}

int cmd_oracle(const Config& c) {
    const Loaded l = load(c);
    const Objective obj = parse_objective(c.objective);
    OracleResult r;
    try {
        r = oracle_optimum(l.graph, obj);
    } catch (const GuardExceeded& e) {
        throw UsageError(std::string(e.what()));
    }
    Json j;
    j["objective"] = to_string(obj);
    j["value"] = r.value;
    j["sequences_examined"] = r.sequences_examined;
    write_output(c, j.dump(2) + "\n");
    return kOk;
}

void add_graph_input(CLI::App* cmd, Config& c) {
    cmd->add_option("--input", c.input, "graph file (edge list, graph6 or representation JSON); - for stdin");
    cmd->add_option("--family", c.family, "generate the input from a family tag instead");
    cmd->add_option("--p", c.p);
    cmd->add_option("--n", c.n);
    cmd->add_option("--q", c.q);
    cmd->add_option("--k", c.k);
    cmd->add_option("--s", c.s);
    cmd->add_option("--max-vertices", c.max_vertices, "vertex guard")->check(CLI::Range(std::size_t{1}, kMaxVertices));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact impropriety of interval graphs"};
    app.require_subcommand(1);
    Config c;

    auto* analyze = app.add_subcommand("analyze", "impropriety, properness, spectrum and structure of a graph");
    add_graph_input(analyze, c);
    analyze->add_option("--format", c.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    analyze->add_option("--workers", c.workers)->check(CLI::Range(1u, 256u));
    analyze->add_option("--time-budget", c.time_budget, "seconds")->check(CLI::PositiveNumber);
    analyze->add_option("--output", c.output);

    auto* generate = app.add_subcommand("generate", "emit a family instance and its metadata");
    generate->add_option("family", c.family, "fig2 fig3 fig4 fig5 qobstruction cliqueleaf clique path star")->required();
    generate->add_option("--p", c.p);
    generate->add_option("--n", c.n);
    generate->add_option("--q", c.q);
    generate->add_option("--k", c.k);
    generate->add_option("--s", c.s);
    generate->add_option("--format", c.format, "edgelist | g6 | dot | json")
        ->check(CLI::IsMember({"edgelist", "g6", "dot", "json"}));
    generate->add_option("--output", c.output, "graph file; metadata goes to <output>.json");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", c.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--p", c.p);
    verify->add_option("--pmax", c.pmax);
    verify->add_option("--nmax", c.nmax);
    verify->add_option("--q", c.q);
    verify->add_option("--workers", c.workers)->check(CLI::Range(1u, 256u));
    verify->add_option("--seed", c.seed);
    verify->add_option("--format", c.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--output", c.output, "directory for <suite>.json and <suite>.md");

    auto* exp = app.add_subcommand("explore", "sweep connected graphs into a JSONL store");
    exp->add_option("--nmax", c.nmax, "largest vertex count (<= 9)");
    exp->add_option("--store", c.store)->required();
    exp->add_option("--input", c.input, "graph6 corpus instead of built-in enumeration");
    exp->add_option("--workers", c.workers)->check(CLI::Range(1u, 256u));
    exp->add_option("--stop-after", c.stop_after, "append at most this many records, then stop unfinalized");

    auto* stats = app.add_subcommand("stats", "aggregate a JSONL store");
    stats->add_option("--store", c.store)->required();
    stats->add_option("--output", c.output);

    auto* render = app.add_subcommand("render", "draw the optimal representation");
    add_graph_input(render, c);
    render->add_option("--format", c.format, "svg | tikz")->check(CLI::IsMember({"svg", "tikz"}));
    render->add_flag_function("--tikz", [&](std::int64_t) { c.format = "tikz"; }, "same as --format tikz");
    render->add_option("--time-budget", c.time_budget, "seconds")->check(CLI::PositiveNumber);
    render->add_option("--output", c.output);

    auto* oracle = app.add_subcommand("oracle", "brute-force optimum (<= 8 vertices)");
    add_graph_input(oracle, c);
    oracle->add_option("--objective", c.objective)->check(CLI::IsMember({"impropriety", "properness"}));
    oracle->add_option("--output", c.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(c);
        if (*generate) return cmd_generate(c);
        if (*verify) return cmd_verify(c);
        if (*exp) return cmd_explore(c);
        if (*stats) return cmd_stats(c);
        if (*render) return cmd_render(c);
        if (*oracle) return cmd_oracle(c);
    } catch (const NotIntervalGraph& e) {
        std::cerr << e.what() << "\n";
        return kDomain;
    } catch (const SearchAborted& e) {
        Json j;
        j["aborted"] = true;
        j["reason"] = "time budget exhausted";
        j["best_found"] = e.best_found ? Json(*e.best_found) : Json();
        j["best_found_meaning"] = "smallest value over explored orderings; an upper bound, not a certificate";
        j["orderings_explored"] = e.explored;
        std::cout << j.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return kGuard;
    } catch (const GuardExceeded& e) {
        std::cerr << e.what() << "\n";
        return kGuard;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const GraphError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const InvalidRepresentation& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
