#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "improper/errors.hpp"
#include "improper/explorer.hpp"
#include "improper/graph_io.hpp"
#include "improper/oracle.hpp"

using namespace improper;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "improper_explorer_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("records match the oracle at four vertices") {
    ExploreOptions o;
    o.max_n = 4;
    o.store = scratch("four.jsonl");
    const auto r = explore(o);
    CHECK(r.candidates == 1 + 1 + 2 + 6);
    CHECK(r.finalized);
    const auto store = read_store(o.store);
    REQUIRE(store.records.size() == 10);
    CHECK(store.corrupt.empty());
    for (const auto& rec : store.records) {
        const Graph g = from_graph6(rec["g6"].get<std::string>());
        if (!rec["interval"].get<bool>()) {
            CHECK(rec["imp"].is_null());
            continue;
        }
        CHECK(rec["imp"].get<int>() == oracle_impropriety(g));
        for (const auto& pv : rec["per_vertex"]) {
            CHECK(pv[1].get<int>() == oracle_impropriety(delete_vertex(g, pv[0].get<int>()).graph));
        }
        CHECK(rec["notes"].is_array());
    }
    // Field order is part of the format.
    std::vector<std::string> keys;
    for (const auto& [k, v] : store.records.front().items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"g6", "key", "n", "interval", "imp", "per_vertex", "spectrum", "critical", "notes"});
}

TEST_CASE("resume after a crash reproduces the store") {
    ExploreOptions full;
    full.max_n = 6;
    full.store = scratch("full.jsonl");
    explore(full);

    ExploreOptions crash = full;
    crash.store = scratch("crash.jsonl");
    crash.stop_after = 40;
    crash.workers = 3;
    const auto partial = explore(crash);
    CHECK(partial.appended == 40);
    CHECK_FALSE(partial.finalized);

    // Cut the last record in half.
    fs::resize_file(crash.store, fs::file_size(crash.store) - 20);
    crash.stop_after.reset();
    const auto resumed = explore(crash);
    CHECK(resumed.skipped == 39);
    REQUIRE(resumed.corrupt.size() == 1);
    CHECK(resumed.corrupt[0].offset > 0);
    CHECK(resumed.finalized);
    CHECK(slurp(crash.store) == slurp(full.store));

    // A second pass has nothing to do.
    const auto again = explore(crash);
    CHECK(again.appended == 0);
    CHECK(slurp(crash.store) == slurp(full.store));
}

TEST_CASE("corrupt lines are reported with offsets") {
    const fs::path p = scratch("corrupt.jsonl");
    {
        std::ofstream out(p, std::ios::binary);
        out << "{\"key\":\"A_\"}\n";
        out << "not json\n";
        out << "{\"nokey\":1}\n";
    }
    const auto s = read_store(p);
    CHECK(s.records.size() == 1);
    REQUIRE(s.corrupt.size() == 2);
    CHECK(s.corrupt[0].offset == 13);
    CHECK(s.corrupt[1].offset == 22);
}

TEST_CASE("ingested corpus and guards") {
    ExploreOptions o;
    o.store = scratch("corpus.jsonl");
    std::istringstream in("Cs\nCs\nD~{\n");
    o.corpus = read_graph6_corpus(in, "inline");
    const auto r = explore(o);
    CHECK(r.candidates == 2);
    CHECK(r.records == 2);

    ExploreOptions big;
    big.max_n = 10;
    big.store = scratch("big.jsonl");
    CHECK_THROWS_AS(explore(big), GuardExceeded);
}

TEST_CASE("conjecture statistics") {
    ExploreOptions o;
    o.max_n = 5;
    o.store = scratch("stats.jsonl");
    explore(o);
    const auto stats = conjecture_stats(read_store(o.store));
    CHECK(stats["records"] == 1 + 1 + 2 + 6 + 21);
    bool saw_claw_class = false;
    for (const auto& c : stats["per_impropriety"]) {
        if (c["imp"] == 1) {
            saw_claw_class = true;
            CHECK(c["critical"].get<int>() >= 1);
        }
    }
    CHECK(saw_claw_class);
}
