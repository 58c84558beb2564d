#pragma once

#include <chrono>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "improper/families.hpp"
#include "improper/graph.hpp"
#include "improper/interval.hpp"

namespace improper {

struct SpectrumReport {
    std::string graph_key;  // canonical form; empty above the canonical guard
    Objective objective = Objective::impropriety;
    int impropriety = 0;  // value of the objective for the whole graph
    std::vector<std::pair<Vertex, int>> per_vertex;
    std::vector<int> spectrum;      // sorted distinct per-vertex values
    std::optional<bool> critical;   // undefined when the value is 0
    bool disconnecting_deletion = false;  // some G - v is disconnected (max-over-components convention)
};

struct LabOptions {
    Objective objective = Objective::impropriety;
    unsigned workers = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Throws NotIntervalGraph, or SearchAborted past the deadline.
SpectrumReport removal_spectrum(const Graph& g, const LabOptions& options = {});

// Throws NotIntervalGraph, or ZeroImpropriety when the value is 0.
bool is_critical(const Graph& g, Objective objective = Objective::impropriety);

// Empty when the report is internally consistent.
std::vector<std::string> spectrum_invariant_violations(const SpectrumReport& r);

// ---------------------------------------------------------------------------
// Verification tables

enum class RowStatus { pass, fail, finding };

std::string to_string(RowStatus status);

struct TableRow {
    std::string subject;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    RowStatus status = RowStatus::pass;
    std::string note;
};

struct VerificationTable {
    std::string suite;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;

    bool passed() const;  // no FAIL rows
    std::size_t count(RowStatus status) const;
};

nlohmann::ordered_json to_json(const VerificationTable& t);
std::string to_markdown(const VerificationTable& t);

// fig2: p in [pmin, pmax], n in [0, p-1]; fig3: n in [0, p/2]; fig4: n in
// [0, p-1]; fig5: p in [max(pmin, 8), pmax].
std::vector<FamilyParams> family_grid(const std::string& tag, int pmin, int pmax);

// Computes impropriety, the drop at the designated vertex, criticality and
// (up to 8 vertices) the oracle values for every instance.
VerificationTable verify_family_claims(const std::string& tag, const std::vector<FamilyParams>& grid,
                                       unsigned workers = 1);

// ---------------------------------------------------------------------------
// Corpora and sweeps

struct Corpus {
    std::string descriptor;
    std::vector<Graph> graphs;
    std::vector<std::string> names;  // parallel to graphs
};

Corpus builtin_corpus(std::size_t max_n, bool connected_only);
Corpus family_corpus(const std::string& tag, const std::vector<FamilyParams>& grid);
// One graph6 string per line; blank lines and lines starting with '#' are skipped.
Corpus read_graph6_corpus(std::istream& in, const std::string& descriptor);

struct ClassSpectrumReport {
    int p = 0;
    std::vector<int> union_spectrum;
    std::map<int, std::string> witnesses;  // value -> canonical key (or name) of first witness
    std::string corpus_descriptor;
    std::size_t graphs_scanned = 0;
    std::size_t critical_found = 0;
};

// Unions the spectra of the critical exactly-p interval graphs of the corpus.
ClassSpectrumReport class_spectrum(int p, const Corpus& corpus, unsigned workers = 1);
nlohmann::ordered_json to_json(const ClassSpectrumReport& r);

// For each basepoint witness with exactly two exterior local components,
// checks |spectrum| <= 4. Violations are FAIL rows when assert_conclusion,
// FINDING rows otherwise. Also tallies how much non-exterior deletions drop
// the impropriety and whether the exterior components are P2.
VerificationTable theorem32_scan(const Corpus& corpus, bool assert_conclusion, unsigned workers = 1);

// Properness-critical exactly-q-proper interval graphs on <= max_n vertices,
// plus gen_qproper_obstruction(q-1): every deletion must give properness 0 or q-1.
VerificationTable qproper_stability(int q, std::size_t max_n = 7, unsigned workers = 1);

}  // namespace improper
