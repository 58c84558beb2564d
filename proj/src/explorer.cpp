#include "improper/explorer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "improper/canonical.hpp"
#include "improper/errors.hpp"
#include "improper/graph_io.hpp"
#include "improper/parallel.hpp"

namespace improper {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

Json explorer_record(const Graph& g) {
    Json j;
    const std::string key = canonical_form(g);
    j["g6"] = to_graph6(g);
    j["key"] = key;
    j["n"] = g.vertex_count();
    std::vector<std::string> notes;
    const auto why = interval_obstruction(g);
    j["interval"] = !why;
    if (why) {
        j["imp"] = nullptr;
        j["per_vertex"] = Json::array();
        j["spectrum"] = Json::array();
        j["critical"] = nullptr;
        notes.push_back(*why);
    } else {
        const SpectrumReport r = removal_spectrum(g);
        j["imp"] = r.impropriety;
        Json pv = Json::array();
        for (const auto& [v, value] : r.per_vertex) pv.push_back({v, value});
        j["per_vertex"] = std::move(pv);
        j["spectrum"] = r.spectrum;
        j["critical"] = r.critical ? Json(*r.critical) : Json();
        if (r.disconnecting_deletion) notes.push_back("disconnecting deletion");
        for (auto& v : spectrum_invariant_violations(r)) notes.push_back("invariant violated: " + v);
    }
    j["notes"] = notes;
    return j;
}

StoreContents read_store(const fs::path& store) {
    StoreContents out;
    std::ifstream in(store, std::ios::binary);
    if (!in) return out;
    std::string line;
    std::uintmax_t offset = 0;
    while (std::getline(in, line)) {
        const std::uintmax_t start = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        try {
            Json j = Json::parse(line);
            if (!j.is_object() || !j.contains("key") || !j["key"].is_string()) {
                out.corrupt.push_back({start, "record without a key"});
                continue;
            }
            out.records.push_back(std::move(j));
        } catch (const nlohmann::json::exception& e) {
            out.corrupt.push_back({start, e.what()});
        }
    }
    return out;
}

namespace {

std::vector<Graph> candidates(const ExploreOptions& o) {
    std::vector<Graph> raw;
    if (o.corpus) {
        raw = o.corpus->graphs;
        for (const auto& g : raw) {
            if (g.vertex_count() > kCanonicalGuard) {
                throw GuardExceeded("corpus graph has " + std::to_string(g.vertex_count()) + " vertices (guard " +
                                    std::to_string(kCanonicalGuard) + ")");
            }
        }
    } else {
        if (o.max_n < 1 || o.max_n > kExplorerGuard) {
            throw GuardExceeded("explore: max_n must be in 1.." + std::to_string(kExplorerGuard));
        }
        raw = enumerate_connected_graphs_up_to(o.max_n);
    }
    // Dedupe and order by canonical key.
    std::map<std::string, Graph> by_key;
    for (auto& g : raw) {
        const std::string key = canonical_form(g);
        by_key.emplace(key, std::move(g));
    }
    std::vector<Graph> out;
    for (auto& [key, g] : by_key) out.push_back(std::move(g));
    return out;
}

void ensure_trailing_newline(const fs::path& store) {
    if (!fs::exists(store) || fs::file_size(store) == 0) return;
    std::ifstream in(store, std::ios::binary);
    in.seekg(-1, std::ios::end);
    char last = 0;
    in.get(last);
    in.close();
    if (last != '\n') {
        std::ofstream out(store, std::ios::binary | std::ios::app);
        out << '\n';
    }
}

}  // namespace

ExploreResult explore(const ExploreOptions& options) {
    ExploreResult result;
    const auto graphs = candidates(options);
    result.candidates = graphs.size();

    const StoreContents existing = read_store(options.store);
    result.corrupt = existing.corrupt;
    std::set<std::string> present;
    for (const auto& r : existing.records) present.insert(r["key"].get<std::string>());

    std::vector<const Graph*> todo;
    for (const auto& g : graphs) {
        if (present.count(canonical_form(g))) {
            ++result.skipped;
        } else {
            todo.push_back(&g);
        }
    }

    if (options.store.has_parent_path()) fs::create_directories(options.store.parent_path());
    ensure_trailing_newline(options.store);
    {
        std::ofstream out(options.store, std::ios::binary | std::ios::app);
        if (!out) throw std::runtime_error("cannot open store " + options.store.string());
        const std::size_t batch = std::max<std::size_t>(64, 16 * std::max(1u, options.workers));
        for (std::size_t start = 0; start < todo.size(); start += batch) {
            const std::size_t count = std::min(batch, todo.size() - start);
            auto lines = parallel_map(count, options.workers,
                                      [&](std::size_t i) { return explorer_record(*todo[start + i]).dump(); });
            for (const auto& line : lines) {
                if (options.stop_after && result.appended >= *options.stop_after) return result;
                out << line << '\n';
                out.flush();
                ++result.appended;
            }
        }
    }
    if (options.stop_after && result.appended >= *options.stop_after && result.appended < todo.size()) {
        return result;
    }

    // Finalize: one record per key, sorted, written atomically.
    StoreContents all = read_store(options.store);
    std::map<std::string, std::string> lines;
    for (const auto& r : all.records) lines.emplace(r["key"].get<std::string>(), r.dump());
    const fs::path tmp = options.store.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        for (const auto& [key, line] : lines) out << line << '\n';
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, options.store);
    result.records = lines.size();
    result.finalized = true;
    return result;
}

Json conjecture_stats(const StoreContents& store) {
    struct Class {
        std::size_t graphs = 0;
        std::size_t critical = 0;
        std::size_t max_spectrum = 0;
        std::string example;
        std::size_t max_critical_spectrum = 0;
        std::string critical_example;
    };
    std::map<int, Class> classes;
    std::size_t non_interval = 0;
    for (const auto& r : store.records) {
        const Json imp = r.value("imp", Json());
        const Json spectrum = r.value("spectrum", Json::array());
        const Json critical = r.value("critical", Json());
        if (!r.value("interval", false) || !imp.is_number_integer()) {
            ++non_interval;
            continue;
        }
        Class& c = classes[imp.get<int>()];
        ++c.graphs;
        const std::size_t size = spectrum.size();
        const std::string key = r["key"].get<std::string>();
        if (c.graphs == 1 || size > c.max_spectrum) {
            c.max_spectrum = size;
            c.example = key;
        }
        if (critical.is_boolean() && critical.get<bool>()) {
            if (++c.critical == 1 || size > c.max_critical_spectrum) {
                c.max_critical_spectrum = size;
                c.critical_example = key;
            }
        }
    }
    Json j;
    j["records"] = store.records.size();
    j["non_interval"] = non_interval;
    Json per = Json::array();
    for (const auto& [imp, c] : classes) {
        per.push_back({{"imp", imp},
                       {"graphs", c.graphs},
                       {"max_spectrum_size", c.max_spectrum},
                       {"example", c.example},
                       {"critical", c.critical},
                       {"max_critical_spectrum_size", c.max_critical_spectrum},
                       {"critical_example", c.critical == 0 ? Json() : Json(c.critical_example)}});
    }
    j["per_impropriety"] = std::move(per);
    return j;
}

}  // namespace improper
