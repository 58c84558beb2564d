#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "improper/spectrum.hpp"

namespace improper {

inline constexpr std::size_t kExplorerGuard = 9;

struct ExploreOptions {
    std::size_t max_n = 7;
    std::filesystem::path store;
    std::optional<Corpus> corpus;  // replaces built-in enumeration when set
    unsigned workers = 1;
    // Stop after appending this many new records, without finalizing (crash simulation).
    std::optional<std::size_t> stop_after;
};

struct CorruptLine {
    std::uintmax_t offset = 0;  // byte offset of the line start
    std::string reason;
};

struct ExploreResult {
    std::size_t candidates = 0;  // distinct graphs considered
    std::size_t skipped = 0;     // already in the store
    std::size_t appended = 0;
    std::size_t records = 0;     // store size after finalization
    std::vector<CorruptLine> corrupt;
    bool finalized = false;
};

// Record as one ordered JSON object: g6 key n interval imp per_vertex spectrum critical notes.
nlohmann::ordered_json explorer_record(const Graph& g);

// Appends one JSONL record per new graph (flushed each time), then rewrites
// the store sorted by key. Corrupt lines are reported and dropped.
ExploreResult explore(const ExploreOptions& options);

struct StoreContents {
    std::vector<nlohmann::ordered_json> records;
    std::vector<CorruptLine> corrupt;
};

// Missing file reads as empty.
StoreContents read_store(const std::filesystem::path& store);

// Per impropriety value: graphs, critical graphs, max |spectrum| and a key attaining it.
nlohmann::ordered_json conjecture_stats(const StoreContents& store);

}  // namespace improper
