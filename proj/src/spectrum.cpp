#include "improper/spectrum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "improper/canonical.hpp"
#include "improper/errors.hpp"
#include "improper/graph_io.hpp"
#include "improper/oracle.hpp"
#include "improper/parallel.hpp"
#include "improper/structure.hpp"

namespace improper {

namespace {

int objective_value(const Graph& g, Objective objective,
                    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
    SearchOptions opts;
    opts.objective = objective;
    opts.deadline = deadline;
    return optimize(g, opts).value;
}

std::string key_or_empty(const Graph& g) {
    return g.vertex_count() <= kCanonicalGuard ? canonical_form(g) : std::string();
}

std::string params_label(const std::string& tag, const FamilyParams& p) {
    std::string s = tag + "(p=" + std::to_string(p.p);
    if (tag != "fig5") s += ",n=" + std::to_string(p.n);
    if (p.s) s += ",s=" + std::to_string(*p.s);
    return s + ")";
}

nlohmann::ordered_json int_list(const std::vector<int>& xs) {
    auto j = nlohmann::ordered_json::array();
    for (int x : xs) j.push_back(x);
    return j;
}

}  // namespace

SpectrumReport removal_spectrum(const Graph& g, const LabOptions& options) {
    if (auto why = interval_obstruction(g)) throw NotIntervalGraph(*why);
    SpectrumReport r;
    r.graph_key = key_or_empty(g);
    r.objective = options.objective;
    r.impropriety = objective_value(g, options.objective, options.deadline);

    struct Deletion {
        int value;
        bool disconnected;
    };
    auto results = parallel_map(g.vertex_count(), options.workers, [&](std::size_t v) {
        auto del = delete_vertex(g, static_cast<Vertex>(v));
        return Deletion{objective_value(del.graph, options.objective, options.deadline),
                        del.graph.vertex_count() > 0 && !is_connected(del.graph)};
    });
    std::set<int> values;
    for (std::size_t v = 0; v < results.size(); ++v) {
        r.per_vertex.emplace_back(static_cast<Vertex>(v), results[v].value);
        values.insert(results[v].value);
        r.disconnecting_deletion = r.disconnecting_deletion || results[v].disconnected;
    }
    r.spectrum.assign(values.begin(), values.end());
    if (r.impropriety > 0) {
        r.critical = std::all_of(r.per_vertex.begin(), r.per_vertex.end(),
                                 [&](const auto& pv) { return pv.second <= r.impropriety - 1; });
    }
    return r;
}

bool is_critical(const Graph& g, Objective objective) {
    LabOptions opts;
    opts.objective = objective;
    auto r = removal_spectrum(g, opts);
    if (!r.critical) throw ZeroImpropriety();
    return *r.critical;
}

std::vector<std::string> spectrum_invariant_violations(const SpectrumReport& r) {
    std::vector<std::string> out;
    std::set<int> values;
    for (std::size_t i = 0; i < r.per_vertex.size(); ++i) {
        const auto& [v, value] = r.per_vertex[i];
        if (v != static_cast<Vertex>(i)) out.push_back("per_vertex entry " + std::to_string(i) + " is out of order");
        if (value < 0) out.push_back("negative value at vertex " + std::to_string(v));
        // Induced subgraphs of interval graphs never need more nesting.
        if (value > r.impropriety) out.push_back("deleting vertex " + std::to_string(v) + " increases the value");
        values.insert(value);
    }
    if (std::vector<int>(values.begin(), values.end()) != r.spectrum) {
        out.push_back("spectrum is not the set of per-vertex values");
    }
    if (r.per_vertex.size() >= 2 && r.spectrum.empty()) out.push_back("empty spectrum");
    if (r.impropriety == 0 && r.critical) out.push_back("criticality defined at value 0");
    if (r.impropriety > 0) {
        if (!r.critical) {
            out.push_back("criticality missing");
        } else {
            const bool expect = !r.spectrum.empty() && r.spectrum.back() <= r.impropriety - 1;
            if (*r.critical != expect) out.push_back("criticality disagrees with per-vertex values");
        }
    }
    return out;
}

std::string to_string(RowStatus status) {
    switch (status) {
        case RowStatus::pass: return "PASS";
        case RowStatus::fail: return "FAIL";
        case RowStatus::finding: return "FINDING";
    }
    return "?";
}

bool VerificationTable::passed() const { return count(RowStatus::fail) == 0; }

std::size_t VerificationTable::count(RowStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.status == status; }));
}

nlohmann::ordered_json to_json(const VerificationTable& t) {
    nlohmann::ordered_json j;
    j["suite"] = t.suite;
    j["passed"] = t.passed();
    j["counts"] = {{"PASS", t.count(RowStatus::pass)},
                   {"FAIL", t.count(RowStatus::fail)},
                   {"FINDING", t.count(RowStatus::finding)}};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        row["subject"] = r.subject;
        row["status"] = to_string(r.status);
        row["data"] = r.data;
        row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["notes"] = t.notes;
    return j;
}

std::string to_markdown(const VerificationTable& t) {
    std::ostringstream out;
    out << "# " << t.suite << "\n\n";
    out << "PASS " << t.count(RowStatus::pass) << ", FAIL " << t.count(RowStatus::fail) << ", FINDING "
        << t.count(RowStatus::finding) << "\n\n";
    if (!t.rows.empty()) {
        out << "| subject | status | data | note |\n|---|---|---|---|\n";
        for (const auto& r : t.rows) {
            std::string fields;
            for (const auto& [k, v] : r.data.items()) {
                if (!fields.empty()) fields += ", ";
                fields += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out << "| " << r.subject << " | " << to_string(r.status) << " | " << fields << " | " << r.note << " |\n";
        }
        out << "\n";
    }
    for (const auto& n : t.notes) out << "- " << n << "\n";
    return out.str();
}

std::vector<FamilyParams> family_grid(const std::string& tag, int pmin, int pmax) {
    std::vector<FamilyParams> grid;
    auto push = [&](int p, int n) {
        FamilyParams fp;
        fp.p = p;
        fp.n = n;
        grid.push_back(fp);
    };
    if (tag == "fig2" || tag == "fig4") {
        for (int p = std::max(pmin, tag == "fig2" ? 1 : 2); p <= pmax; ++p) {
            for (int n = 0; n <= p - 1; ++n) push(p, n);
        }
    } else if (tag == "fig3") {
        for (int p = std::max(pmin, 2); p <= pmax; ++p) {
            for (int n = 0; n <= p / 2; ++n) push(p, n);
        }
    } else if (tag == "fig5") {
        for (int p = std::max(pmin, 8); p <= pmax; ++p) push(p, 7);
    } else {
        throw InvalidParameters("no parameter grid for family '" + tag + "'");
    }
    return grid;
}

VerificationTable verify_family_claims(const std::string& tag, const std::vector<FamilyParams>& grid,
                                       unsigned workers) {
    if (tag != "fig2" && tag != "fig3" && tag != "fig4" && tag != "fig5") {
        throw InvalidParameters("no claims to verify for family '" + tag + "'");
    }
    VerificationTable table;
    table.suite = tag;
    table.rows = parallel_map(grid.size(), workers, [&](std::size_t i) {
        const FamilyInstance inst = make_family(tag, grid[i]);
        const SpectrumReport spec = removal_spectrum(inst.graph);
        const int before = spec.impropriety;
        const int drop = spec.per_vertex[inst.designated_vertex].second;

        TableRow row;
        row.subject = params_label(tag, inst.params);
        auto& d = row.data;
        d["p"] = inst.params.p;
        d["n"] = inst.params.n;
        if (inst.calibration) d["s"] = inst.calibration->chosen_s;
        d["vertices"] = inst.graph.vertex_count();
        d["expected_impropriety"] = inst.expected_impropriety;
        d["impropriety"] = before;
        d["expected_drop"] = inst.expected_drop_value;
        d["drop"] = drop;
        d["critical"] = spec.critical ? nlohmann::ordered_json(*spec.critical) : nlohmann::ordered_json();
        d["spectrum"] = int_list(spec.spectrum);

        bool oracle_ok = true;
        if (inst.graph.vertex_count() <= kOracleGuard) {
            const int ob = oracle_impropriety(inst.graph);
            const int od = oracle_impropriety(delete_vertex(inst.graph, inst.designated_vertex).graph);
            d["oracle_impropriety"] = ob;
            d["oracle_drop"] = od;
            oracle_ok = ob == before && od == drop;
        } else {
            d["oracle_impropriety"] = nullptr;
            d["oracle_drop"] = nullptr;
        }

        const bool claim = before == inst.expected_impropriety && drop == inst.expected_drop_value;
        std::vector<std::string> notes = inst.notes;
        const auto broken = spectrum_invariant_violations(spec);
        if (!broken.empty()) {
            row.status = RowStatus::fail;
            notes.insert(notes.end(), broken.begin(), broken.end());
        } else if (!oracle_ok) {
            row.status = RowStatus::fail;
            notes.push_back("engine disagrees with oracle");
        } else if (tag == "fig2" || tag == "fig3" || (tag == "fig5" && inst.params.p == 8)) {
            row.status = claim ? RowStatus::pass : RowStatus::fail;
        } else if (tag == "fig5") {
            row.status = claim ? RowStatus::pass : RowStatus::finding;
            if (!claim) notes.push_back("impropriety " + std::to_string(before) + ", drop " + std::to_string(drop));
        } else {
            // fig4: the calibrated impropriety is the checked part; the drop is reported.
            if (before != inst.expected_impropriety) {
                row.status = RowStatus::finding;
            } else if (drop != inst.expected_drop_value || drop >= before) {
                row.status = RowStatus::finding;
                if (drop >= before) notes.push_back("deleting D does not lower the impropriety");
            }
        }
        if (spec.critical && !*spec.critical) notes.push_back("not critical");
        for (const auto& n : notes) row.note += (row.note.empty() ? "" : "; ") + n;
        return row;
    });
    return table;
}

Corpus builtin_corpus(std::size_t max_n, bool connected_only) {
    Corpus c;
    c.descriptor = std::string(connected_only ? "connected" : "all") + " graphs on <= " + std::to_string(max_n) +
                   " vertices";
    c.graphs = connected_only ? enumerate_connected_graphs_up_to(max_n) : enumerate_graphs_up_to(max_n);
    for (const auto& g : c.graphs) c.names.push_back(to_graph6(g));
    return c;
}

Corpus family_corpus(const std::string& tag, const std::vector<FamilyParams>& grid) {
    Corpus c;
    c.descriptor = tag + " instances";
    for (const auto& fp : grid) {
        auto inst = make_family(tag, fp);
        c.names.push_back(params_label(tag, inst.params));
        c.graphs.push_back(std::move(inst.graph));
    }
    return c;
}

Corpus read_graph6_corpus(std::istream& in, const std::string& descriptor) {
    Corpus c;
    c.descriptor = descriptor;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            c.graphs.push_back(from_graph6(line));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        c.names.push_back(line);
    }
    return c;
}

ClassSpectrumReport class_spectrum(int p, const Corpus& corpus, unsigned workers) {
    if (p < 1) throw InvalidParameters("class spectrum: p must be >= 1");
    auto reports = parallel_map(corpus.graphs.size(), workers, [&](std::size_t i) -> std::optional<SpectrumReport> {
        const Graph& g = corpus.graphs[i];
        if (!is_interval_graph(g) || impropriety(g).value != p) return std::nullopt;
        return removal_spectrum(g);
    });
    ClassSpectrumReport r;
    r.p = p;
    r.corpus_descriptor = corpus.descriptor;
    r.graphs_scanned = corpus.graphs.size();
    std::set<int> all;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i] || !reports[i]->critical.value_or(false)) continue;
        ++r.critical_found;
        for (int v : reports[i]->spectrum) {
            all.insert(v);
            r.witnesses.emplace(v, corpus.names[i]);
        }
    }
    r.union_spectrum.assign(all.begin(), all.end());
    return r;
}

nlohmann::ordered_json to_json(const ClassSpectrumReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["corpus"] = r.corpus_descriptor;
    j["graphs_scanned"] = r.graphs_scanned;
    j["critical_found"] = r.critical_found;
    j["union_spectrum"] = int_list(r.union_spectrum);
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [v, name] : r.witnesses) w[std::to_string(v)] = name;
    j["witnesses"] = std::move(w);
    return j;
}

VerificationTable theorem32_scan(const Corpus& corpus, bool assert_conclusion, unsigned workers) {
    auto rows = parallel_map(corpus.graphs.size(), workers, [&](std::size_t i) -> std::optional<TableRow> {
        const Graph& g = corpus.graphs[i];
        if (!is_interval_graph(g)) return std::nullopt;
        const StructureReport st = analyze_structure(g);
        if (st.impropriety == 0) return std::nullopt;
        std::vector<const BasepointAnalysis*> hyp;
        for (const auto& a : st.per_basepoint) {
            if (a.exterior_count() == 2) hyp.push_back(&a);
        }
        if (hyp.empty()) return std::nullopt;

        const SpectrumReport spec = removal_spectrum(g);
        TableRow row;
        row.subject = corpus.names[i];
        auto& d = row.data;
        d["vertices"] = g.vertex_count();
        d["impropriety"] = st.impropriety;
        d["spectrum"] = int_list(spec.spectrum);
        d["spectrum_size"] = spec.spectrum.size();
        d["critical"] = *spec.critical;

        auto bases = nlohmann::ordered_json::array();
        bool all_p2 = true;
        std::map<int, int> drops;  // impropriety - value over non-exterior deletions
        for (const auto* a : hyp) {
            bases.push_back(a->basepoint);
            for (std::size_t c = 0; c < a->local_components.size(); ++c) {
                const auto& comp = a->local_components[c];
                if (a->exterior[c]) {
                    all_p2 = all_p2 && comp.size() == 2 && g.adjacent(comp[0], comp[1]);
                } else {
                    for (Vertex v : comp) ++drops[st.impropriety - spec.per_vertex[v].second];
                }
            }
        }
        d["basepoints"] = std::move(bases);
        d["exterior_all_p2"] = all_p2;
        nlohmann::ordered_json dj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : drops) dj[std::to_string(k)] = v;
        d["non_exterior_drops"] = std::move(dj);

        if (spec.spectrum.size() > 4) {
            row.status = assert_conclusion ? RowStatus::fail : RowStatus::finding;
            row.note = "spectrum has " + std::to_string(spec.spectrum.size()) + " values";
        }
        return row;
    });

    VerificationTable t;
    t.suite = "thm32";
    std::size_t met = 0, violations = 0, p2 = 0;
    for (auto& r : rows) {
        if (!r) continue;
        ++met;
        if (r->status != RowStatus::pass) ++violations;
        if (r->data["exterior_all_p2"].get<bool>()) ++p2;
        t.rows.push_back(std::move(*r));
    }
    t.notes.push_back("corpus: " + corpus.descriptor + " (" + std::to_string(corpus.graphs.size()) + " graphs)");
    t.notes.push_back("graphs with a basepoint witness having exactly two exterior components: " +
                      std::to_string(met));
    t.notes.push_back("of these, exterior components all P2: " + std::to_string(p2));
    t.notes.push_back("spectrum larger than 4: " + std::to_string(violations));
    return t;
}

VerificationTable qproper_stability(int q, std::size_t max_n, unsigned workers) {
    if (q < 0) throw InvalidParameters("qproper: q must be >= 0");
    VerificationTable t;
    t.suite = "qproper(q=" + std::to_string(q) + ")";
    if (q == 0) {
        t.notes.push_back("q=0: criticality is undefined at properness 0, nothing to check");
        return t;
    }
    Corpus corpus = builtin_corpus(max_n, false);
    corpus.graphs.push_back(gen_qproper_obstruction(q - 1));
    corpus.names.push_back("qobstruction(q=" + std::to_string(q - 1) + ")");
    const std::size_t obstruction = corpus.graphs.size() - 1;

    LabOptions opts;
    opts.objective = Objective::properness;
    auto rows = parallel_map(corpus.graphs.size(), workers, [&](std::size_t i) -> std::optional<TableRow> {
        const Graph& g = corpus.graphs[i];
        if (!is_interval_graph(g)) return std::nullopt;
        if (i != obstruction && objective_value(g, Objective::properness) != q) return std::nullopt;
        const SpectrumReport spec = removal_spectrum(g, opts);
        if (i != obstruction && !spec.critical.value_or(false)) return std::nullopt;

        TableRow row;
        row.subject = corpus.names[i];
        row.data["vertices"] = g.vertex_count();
        row.data["properness"] = spec.impropriety;
        row.data["critical"] = spec.critical ? nlohmann::ordered_json(*spec.critical) : nlohmann::ordered_json();
        row.data["spectrum"] = int_list(spec.spectrum);
        const bool values_ok = std::all_of(spec.spectrum.begin(), spec.spectrum.end(),
                                           [&](int v) { return v == 0 || v == q - 1; });
        const bool ok = spec.impropriety == q && spec.critical.value_or(false) && values_ok;
        row.status = ok ? RowStatus::pass : RowStatus::fail;
        if (!values_ok) row.note = "deletion value outside {0, q-1}";
        return row;
    });
    for (auto& r : rows) {
        if (r) t.rows.push_back(std::move(*r));
    }
    t.notes.push_back("corpus: all graphs on <= " + std::to_string(max_n) + " vertices plus the obstruction");
    return t;
}

}  // namespace improper
