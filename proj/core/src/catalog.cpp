#include "nearfact/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nearfact {

namespace {

using nlohmann::json;

json coords_to_json(const std::vector<std::vector<std::uint32_t>>& elems) {
    json arr = json::array();
    for (const auto& e : elems) arr.push_back(e);
    return arr;
}

std::vector<std::vector<std::uint32_t>> coords_from_json(const json& arr) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& e : arr) out.push_back(e.get<std::vector<std::uint32_t>>());
    return out;
}

}  // namespace

CatalogRecord make_catalog_record(const NearFactorization& nf, SearchStrategy strategy,
                                  MateAlgorithm algorithm, double elapsed_ms, std::int64_t timestamp) {
    CatalogRecord rec;
    rec.a = nf.a.coords();
    rec.b = nf.b.coords();
    rec.algorithm = algorithm == MateAlgorithm::Dense ? "dense" : "sparse";
    rec.elapsed_ms = elapsed_ms;
    rec.group = nf.group.name();
    rec.lambda = nf.lambda;
    rec.r = static_cast<std::uint32_t>(nf.a.size());
    rec.s = static_cast<std::uint32_t>(nf.b.size());
    rec.strategy = to_string(strategy);
    rec.timestamp = timestamp;
    return rec;
}

std::string to_json_line(const CatalogRecord& record) {
    json j;
    j["a"] = coords_to_json(record.a);
    j["algorithm"] = record.algorithm;
    j["b"] = coords_to_json(record.b);
    j["elapsed_ms"] = record.elapsed_ms;
    j["group"] = record.group;
    j["lambda"] = record.lambda;
    j["r"] = record.r;
    j["s"] = record.s;
    j["strategy"] = record.strategy;
    j["timestamp"] = record.timestamp;
    j["v"] = record.v;
    return j.dump();
}

CatalogRecord catalog_record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad catalog record: ") + e.what());
    }
    try {
        CatalogRecord rec;
        rec.v = j.at("v").get<int>();
        if (rec.v != 1) throw std::runtime_error("unsupported catalog record version " + std::to_string(rec.v));
        rec.a = coords_from_json(j.at("a"));
        rec.b = coords_from_json(j.at("b"));
        rec.algorithm = j.at("algorithm").get<std::string>();
        rec.elapsed_ms = j.at("elapsed_ms").get<double>();
        rec.group = j.at("group").get<std::string>();
        rec.lambda = j.at("lambda").get<std::uint32_t>();
        rec.r = j.at("r").get<std::uint32_t>();
        rec.s = j.at("s").get<std::uint32_t>();
        rec.strategy = j.at("strategy").get<std::string>();
        rec.timestamp = j.at("timestamp").get<std::int64_t>();
        return rec;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad catalog record: ") + e.what());
    }
}

void append_catalog(const std::string& path, const std::vector<CatalogRecord>& records) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open catalog file " + path);
    for (const auto& rec : records) out << to_json_line(rec) << '\n';
}

std::vector<CatalogRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    std::vector<CatalogRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        CatalogRecord rec = catalog_record_from_json(line);
        GroupSpec g = GroupSpec::parse(rec.group);
        GroupSubset a = GroupSubset::from_coords(g, rec.a);
        GroupSubset b = GroupSubset::from_coords(g, rec.b);
        if (a.size() != rec.r || b.size() != rec.s)
            throw std::runtime_error("catalog line " + std::to_string(line_no) + " has wrong set sizes");
        if (!verify(g, a, b, rec.lambda))
            throw std::runtime_error("catalog line " + std::to_string(line_no) + " fails verification");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string checkpoint_to_json(const SearchTask& task, const EnumerationCursor& cursor) {
    json j;
    j["cursor"]["involution_rank"] = cursor.involution_rank;
    j["cursor"]["pair_rank"] = cursor.pair_rank;
    j["cursor"]["profile_index"] = cursor.profile_index;
    if (task.assume_symmetric)
        j["task"]["assume_symmetric"] = *task.assume_symmetric;
    else
        j["task"]["assume_symmetric"] = nullptr;
    j["task"]["group"] = task.group.name();
    j["task"]["lambda"] = task.lambda;
    j["task"]["r"] = task.r;
    j["task"]["s"] = task.s;
    j["task"]["strategy"] = to_string(task.strategy);
    j["v"] = 1;
    return j.dump();
}

std::pair<SearchTask, EnumerationCursor> checkpoint_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad checkpoint: ") + e.what());
    }
    try {
        if (j.at("v").get<int>() != 1) throw std::runtime_error("unsupported checkpoint version");
        SearchTask task;
        task.group = GroupSpec::parse(j.at("task").at("group").get<std::string>());
        task.lambda = j.at("task").at("lambda").get<std::uint32_t>();
        task.r = j.at("task").at("r").get<std::uint32_t>();
        task.s = j.at("task").at("s").get<std::uint32_t>();
        task.strategy = search_strategy_from_string(j.at("task").at("strategy").get<std::string>());
        const auto& sym = j.at("task").at("assume_symmetric");
        if (!sym.is_null()) task.assume_symmetric = sym.get<bool>();
        EnumerationCursor cursor;
        cursor.involution_rank = j.at("cursor").at("involution_rank").get<std::uint64_t>();
        cursor.pair_rank = j.at("cursor").at("pair_rank").get<std::uint64_t>();
        cursor.profile_index = j.at("cursor").at("profile_index").get<std::uint64_t>();
        task.resume = cursor;
        return {std::move(task), cursor};
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad checkpoint: ") + e.what());
    }
}

void save_checkpoint(const std::string& path, const SearchTask& task, const EnumerationCursor& cursor) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << checkpoint_to_json(task, cursor) << '\n';
        out.flush();
        if (!out) throw std::runtime_error("failed writing checkpoint file " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<std::pair<SearchTask, EnumerationCursor>> load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    return checkpoint_from_json(buf.str());
}

}  // namespace nearfact
