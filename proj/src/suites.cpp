#include "improper/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "improper/canonical.hpp"
#include "improper/errors.hpp"
#include "improper/oracle.hpp"
#include "improper/parallel.hpp"

namespace improper {

namespace {

struct Range {
    int lo;
    int hi;
};

Range p_range(const SuiteOptions& o, int lo, int default_hi) {
    if (o.p) return {*o.p, *o.p};
    return {lo, o.pmax.value_or(default_hi)};
}

VerificationTable family_suite(const std::string& name, const std::string& tag, const SuiteOptions& o,
                               int default_pmax) {
    const Range r = p_range(o, tag == "fig5" ? 8 : 2, default_pmax);
    if (r.hi > 12) throw InvalidParameters(name + ": p must be <= 12");
    auto table = verify_family_claims(tag, family_grid(tag, r.lo, r.hi), o.workers);
    table.suite = name;
    return table;
}

int clamp_nmax(const SuiteOptions& o, int fallback, int guard, const std::string& suite) {
    const int n = o.nmax.value_or(fallback);
    if (n < 1 || n > guard) {
        throw InvalidParameters(suite + ": nmax must be in 1.." + std::to_string(guard));
    }
    return n;
}

VerificationTable oracle_equivalence(const SuiteOptions& o) {
    const int nmax = clamp_nmax(o, 6, static_cast<int>(kOracleGuard), "oracle-equivalence");
    VerificationTable t;
    t.suite = "oracle-equivalence";
    for (int n = 1; n <= nmax; ++n) {
        const auto graphs = enumerate_graphs(static_cast<std::size_t>(n));
        struct Outcome {
            bool interval = false;
            bool imp_ok = true;
            bool prop_ok = true;
        };
        auto outcomes = parallel_map(graphs.size(), o.workers, [&](std::size_t i) {
            Outcome out;
            const Graph& g = graphs[i];
            out.interval = is_interval_graph(g);
            if (!out.interval) return out;
            out.imp_ok = impropriety(g).value == oracle_impropriety(g);
            out.prop_ok = properness(g).value == oracle_properness(g);
            return out;
        });
        std::size_t interval = 0, imp_bad = 0, prop_bad = 0;
        std::string first_bad;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            interval += outcomes[i].interval;
            imp_bad += !outcomes[i].imp_ok;
            prop_bad += !outcomes[i].prop_ok;
            if ((!outcomes[i].imp_ok || !outcomes[i].prop_ok) && first_bad.empty()) first_bad = canonical_form(graphs[i]);
        }
        TableRow row;
        row.subject = "n=" + std::to_string(n);
        row.data["graphs"] = graphs.size();
        row.data["interval_graphs"] = interval;
        row.data["impropriety_mismatches"] = imp_bad;
        row.data["properness_mismatches"] = prop_bad;
        if (imp_bad + prop_bad > 0) {
            row.status = RowStatus::fail;
            row.note = "first mismatch " + first_bad;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

VerificationTable class_spectrum_suite(const SuiteOptions& o) {
    const int nmax = clamp_nmax(o, 7, 8, "classspec");
    const Range r = p_range(o, 1, 3);
    const Corpus corpus = builtin_corpus(static_cast<std::size_t>(nmax), false);
    VerificationTable t;
    t.suite = "classspec";
    for (int p = r.lo; p <= r.hi; ++p) {
        const auto rep = class_spectrum(p, corpus, o.workers);
        TableRow row;
        row.subject = "p=" + std::to_string(p);
        row.data = to_json(rep);
        std::vector<int> full(static_cast<std::size_t>(p));
        for (int v = 0; v < p; ++v) full[static_cast<std::size_t>(v)] = v;
        const bool subset = rep.union_spectrum.empty() || (rep.union_spectrum.front() >= 0 && rep.union_spectrum.back() <= p - 1);
        if (!subset) {
            row.status = RowStatus::fail;
            row.note = "union exceeds {0..p-1}";
        } else if (rep.union_spectrum != full) {
            row.status = RowStatus::finding;
            row.note = "corpus does not realize all of {0..p-1}";
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

VerificationTable qproper_suite(const SuiteOptions& o) {
    const int nmax = clamp_nmax(o, 7, 8, "qproper");
    int lo = 1, hi = 3;
    if (o.q) lo = hi = *o.q;
    if (lo < 0 || hi > 4) throw InvalidParameters("qproper: q must be in 0..4");
    VerificationTable t;
    t.suite = "qproper";
    for (int q = lo; q <= hi; ++q) {
        auto part = qproper_stability(q, static_cast<std::size_t>(nmax), o.workers);
        for (auto& row : part.rows) {
            row.subject = "q=" + std::to_string(q) + " " + row.subject;
            t.rows.push_back(std::move(row));
        }
        for (auto& n : part.notes) t.notes.push_back("q=" + std::to_string(q) + ": " + n);
    }
    return t;
}

VerificationTable thm32_suite(const SuiteOptions& o) {
    const Range r = p_range(o, 2, 6);
    auto t = theorem32_scan(family_corpus("fig2", family_grid("fig2", r.lo, r.hi)), true, o.workers);
    t.suite = "thm32";
    if (o.nmax) {
        const int nmax = clamp_nmax(o, 7, 8, "thm32");
        auto general = theorem32_scan(builtin_corpus(static_cast<std::size_t>(nmax), false), false, o.workers);
        for (auto& row : general.rows) t.rows.push_back(std::move(row));
        for (auto& n : general.notes) t.notes.push_back("report-only " + n);
    }
    return t;
}

// Portable draws: the standard distributions are implementation-defined.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

std::vector<Vertex> permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
    return perm;
}

VerificationTable properties_suite(const SuiteOptions& o) {
    const int nmax = clamp_nmax(o, 7, 8, "properties");
    VerificationTable t;
    t.suite = "properties";
    std::vector<Graph> interval;
    for (auto& g : enumerate_graphs_up_to(static_cast<std::size_t>(nmax))) {
        if (is_interval_graph(g)) interval.push_back(std::move(g));
    }
    const auto values = parallel_map(interval.size(), o.workers, [&](std::size_t i) { return impropriety(interval[i]).value; });

    {
        auto bad = parallel_map(interval.size(), o.workers, [&](std::size_t i) {
            std::size_t count = 0;
            for (std::size_t v = 0; v < interval[i].vertex_count(); ++v) {
                count += impropriety(delete_vertex(interval[i], static_cast<Vertex>(v)).graph).value > values[i];
            }
            return count;
        });
        TableRow row;
        row.subject = "monotonicity under deletion";
        row.data["graphs"] = interval.size();
        std::size_t total = 0;
        for (auto b : bad) total += b;
        row.data["violations"] = total;
        if (total) row.status = RowStatus::fail;
        t.rows.push_back(std::move(row));
    }
    {
        // One seed per graph, so results do not depend on scheduling.
        auto bad = parallel_map(interval.size(), o.workers, [&](std::size_t i) {
            std::mt19937_64 rng(o.seed * 1000003u + i);
            std::size_t count = 0;
            for (int k = 0; k < 20; ++k) {
                const Graph h = interval[i].relabeled(permutation(rng, interval[i].vertex_count()));
                count += impropriety(h).value != values[i];
            }
            return count;
        });
        TableRow row;
        row.subject = "relabeling invariance";
        row.data["graphs"] = interval.size();
        row.data["permutations_per_graph"] = 20;
        row.data["seed"] = o.seed;
        std::size_t total = 0;
        for (auto b : bad) total += b;
        row.data["violations"] = total;
        if (total) row.status = RowStatus::fail;
        t.rows.push_back(std::move(row));
    }
    {
        std::size_t checked = 0, total = 0;
        for (std::size_t i = 0; i < interval.size(); ++i) {
            if (interval[i].vertex_count() > 6) continue;
            ++checked;
            total += (values[i] == 0) != !has_induced_claw(interval[i]);
        }
        TableRow row;
        row.subject = "zero impropriety iff claw-free";
        row.data["graphs"] = checked;
        row.data["violations"] = total;
        if (total) row.status = RowStatus::fail;
        t.rows.push_back(std::move(row));
    }
    {
        std::mt19937_64 rng(o.seed);
        const std::size_t composites = 200;
        std::vector<std::vector<std::size_t>> parts(composites);
        for (auto& part : parts) {
            std::size_t total = 0;
            const std::size_t count = 2 + draw(rng, 2);
            for (std::size_t k = 0; k < count; ++k) {
                const std::size_t pick = draw(rng, interval.size());
                if (total + interval[pick].vertex_count() > 8) continue;
                total += interval[pick].vertex_count();
                part.push_back(pick);
            }
        }
        auto bad = parallel_map(composites, o.workers, [&](std::size_t c) {
            Graph g(0);
            int expect = 0;
            for (std::size_t pick : parts[c]) {
                g = disjoint_union(g, interval[pick]);
                expect = std::max(expect, values[pick]);
            }
            return impropriety(g).value != expect;
        });
        TableRow row;
        row.subject = "disconnected equals max over components";
        row.data["composites"] = composites;
        row.data["seed"] = o.seed;
        row.data["violations"] = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), true));
        if (row.data["violations"].get<std::size_t>()) row.status = RowStatus::fail;
        t.rows.push_back(std::move(row));
    }
    t.notes.push_back("interval graphs on <= " + std::to_string(nmax) + " vertices: " + std::to_string(interval.size()));
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"mainthm", "fig3",      "fig4",       "fig5",
                                                   "qproper", "thm32",     "oracle-equivalence", "classspec",
                                                   "properties"};
    return names;
}

VerificationTable run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "mainthm") return family_suite(name, "fig2", options, 6);
    if (name == "fig3") return family_suite(name, "fig3", options, 6);
    if (name == "fig4") return family_suite(name, "fig4", options, 6);
    if (name == "fig5") return family_suite(name, "fig5", options, 10);
    if (name == "qproper") return qproper_suite(options);
    if (name == "thm32") return thm32_suite(options);
    if (name == "oracle-equivalence") return oracle_equivalence(options);
    if (name == "classspec") return class_spectrum_suite(options);
    if (name == "properties") return properties_suite(options);
    throw InvalidParameters("unknown suite '" + name + "'");
}

}  // namespace improper
