#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearfact/mate.hpp"
#include "nearfact/search.hpp"

namespace nearfact {

/// One discovered pair, as stored in the result catalog (JSON lines).
/// Elements are coordinate tuples; keys are emitted alphabetically so a
/// record round-trips byte for byte.
struct CatalogRecord {
    std::vector<std::vector<std::uint32_t>> a;
    std::vector<std::vector<std::uint32_t>> b;
    std::string algorithm;  // mate algorithm that produced b
    double elapsed_ms = 0;
    std::string group;  // factor-list name, e.g. "Z23xZ2xZ2"; coordinates follow this order
    std::uint32_t lambda = 1;
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::string strategy;
    std::int64_t timestamp = 0;  // unix seconds
    int v = 1;                   // record schema version

    bool operator==(const CatalogRecord&) const = default;
};

CatalogRecord make_catalog_record(const NearFactorization& nf, SearchStrategy strategy,
                                  MateAlgorithm algorithm, double elapsed_ms, std::int64_t timestamp);

std::string to_json_line(const CatalogRecord& record);

/// Parses one JSON line.  Throws std::runtime_error on malformed input or an
/// unknown schema version.
CatalogRecord catalog_record_from_json(const std::string& line);

void append_catalog(const std::string& path, const std::vector<CatalogRecord>& records);

/// Loads a catalog and re-verifies every record against the mate condition;
/// a record that fails verification raises std::runtime_error naming its
/// line number.
std::vector<CatalogRecord> load_catalog(const std::string& path);

std::string checkpoint_to_json(const SearchTask& task, const EnumerationCursor& cursor);
std::pair<SearchTask, EnumerationCursor> checkpoint_from_json(const std::string& text);

/// Write-to-temp-then-rename, so an interrupted write never clobbers the
/// previous checkpoint.
void save_checkpoint(const std::string& path, const SearchTask& task, const EnumerationCursor& cursor);
std::optional<std::pair<SearchTask, EnumerationCursor>> load_checkpoint(const std::string& path);

}  // namespace nearfact
