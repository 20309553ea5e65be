#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearfact/campaign.hpp"
#include "nearfact/catalog.hpp"
#include "nearfact/group.hpp"
#include "nearfact/mate.hpp"
#include "nearfact/search.hpp"

using namespace nearfact;

namespace {

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "nearfact_campaign_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::vector<std::string> names(const std::vector<GroupSpec>& groups) {
    std::vector<std::string> out;
    for (const auto& g : groups) out.push_back(g.name());
    return out;
}

NearFactorization z7_pair() {
    auto g = GroupSpec::parse("Z7");
    return {g, GroupSubset::from_indices(g, {1, 6}),
            GroupSubset::from_indices(g, {0, 3, 4}), 1};
}

}  // namespace

TEST_CASE("abelian groups of a given order") {
    CHECK(names(abelian_groups_of_order(2)) == std::vector<std::string>{"Z2"});
    CHECK(names(abelian_groups_of_order(8)) ==
          std::vector<std::string>{"Z2xZ2xZ2", "Z2xZ4", "Z8"});
    CHECK(names(abelian_groups_of_order(36)) ==
          std::vector<std::string>{"Z2xZ2xZ3xZ3", "Z2xZ2xZ9", "Z3xZ3xZ4",
                                   "Z4xZ9"});
    CHECK(names(abelian_groups_of_order(144)) ==
          std::vector<std::string>{"Z2xZ2xZ2xZ2xZ3xZ3", "Z2xZ2xZ2xZ2xZ9",
                                   "Z2xZ2xZ3xZ3xZ4", "Z2xZ2xZ4xZ9",
                                   "Z2xZ3xZ3xZ8", "Z2xZ8xZ9", "Z3xZ3xZ4xZ4",
                                   "Z3xZ3xZ16", "Z4xZ4xZ9", "Z9xZ16"});

    auto groups = abelian_groups_of_order(144);
    int cyclic = 0;
    for (const auto& g : groups) cyclic += g.is_cyclic() ? 1 : 0;
    CHECK(cyclic == 1);

    CHECK_THROWS_WITH_AS(abelian_groups_of_order(1), "order must be at least 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(abelian_groups_of_order(0), std::invalid_argument);
}

TEST_CASE("nontrivial splits of lambda*(n-1)") {
    using Splits = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    CHECK(nontrivial_splits(144, 1) == Splits{{11, 13}});
    CHECK(nontrivial_splits(8, 1) == Splits{});  // 7 is prime
    CHECK(nontrivial_splits(9, 2) == Splits{{2, 8}, {4, 4}});
    CHECK(nontrivial_splits(145, 1) == Splits{{2, 72},
                                              {3, 48},
                                              {4, 36},
                                              {6, 24},
                                              {8, 18},
                                              {9, 16},
                                              {12, 12}});
    // both sides must fit inside the group
    CHECK(nontrivial_splits(5, 2) == Splits{{2, 4}});
    CHECK(nontrivial_splits(3, 4) == Splits{});
}

TEST_CASE("task outcome labels") {
    CHECK(std::string(to_string(TaskOutcome::RuledOut)) == "ruled-out");
    CHECK(std::string(to_string(TaskOutcome::NoneFound)) == "none-found");
    CHECK(std::string(to_string(TaskOutcome::Found)) == "found");
    CHECK(std::string(to_string(TaskOutcome::Incomplete)) == "incomplete");
    CHECK(std::string(to_string(TaskOutcome::SkippedCyclic)) ==
          "skipped-cyclic");
    CHECK(std::string(to_string(TaskOutcome::NoSplits)) == "no-splits");
}

TEST_CASE("order 144 campaign is settled by filters alone") {
    CampaignConfig config;
    config.groups = abelian_groups_of_order(144);
    config.only_r = 11;

    auto report = run_campaign(config);
    CHECK(report.complete);
    CHECK(report.searches_launched == 0);
    CHECK(report.found.empty());
    REQUIRE(report.rows.size() == 10);

    struct Expected {
        const char* group;
        TaskOutcome outcome;
        const char* method;
    };
    const Expected expected[] = {
        {"Z2xZ2xZ2xZ2xZ3xZ3", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z2xZ2xZ2xZ2xZ9", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z2xZ2xZ3xZ3xZ4", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z2xZ2xZ4xZ9", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z2xZ3xZ3xZ8", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z2xZ8xZ9", TaskOutcome::RuledOut, "filter:Pecher"},
        {"Z3xZ3xZ4xZ4", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z3xZ3xZ16", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z4xZ4xZ9", TaskOutcome::RuledOut, "filter:ExponentQuotient"},
        {"Z9xZ16", TaskOutcome::SkippedCyclic, ""},
    };
    for (std::size_t i = 0; i < 10; ++i) {
        const auto& row = report.rows[i];
        CHECK(row.group == expected[i].group);
        CHECK(row.order == 144);
        CHECK(row.outcome == expected[i].outcome);
        CHECK(row.candidates == 0);
        if (row.outcome == TaskOutcome::RuledOut) {
            CHECK(row.r == 11);
            CHECK(row.s == 13);
            CHECK(row.method == expected[i].method);
        } else {
            CHECK(row.r == 0);
        }
    }

    auto table = campaign_report_table(report);
    CHECK(table.find("searches launched: 0") != std::string::npos);
    CHECK(table.find("pairs found: 0") != std::string::npos);
    CHECK(table.find("-") != std::string::npos);  // the skipped cyclic row
}

TEST_CASE("tiny order range campaign") {
    CampaignConfig config;
    config.order_min = 4;
    config.order_max = 4;

    auto report = run_campaign(config);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].group == "Z2xZ2");
    CHECK(report.rows[0].outcome == TaskOutcome::NoSplits);
    CHECK(report.rows[1].group == "Z4");
    CHECK(report.rows[1].outcome == TaskOutcome::SkippedCyclic);

    config.include_cyclic = true;
    auto inclusive = run_campaign(config);
    CHECK(inclusive.rows[1].outcome == TaskOutcome::NoSplits);
}

TEST_CASE("campaign search with catalog persistence") {
    auto dir = scratch_dir();
    auto catalog_path = (dir / "found.jsonl").string();

    CampaignConfig config;
    config.groups = {GroupSpec::parse("Z7")};
    config.include_cyclic = true;
    config.catalog_path = catalog_path;

    auto report = run_campaign(config);
    CHECK(report.complete);
    CHECK(report.searches_launched == 1);
    REQUIRE(report.rows.size() == 1);
    const auto& row = report.rows[0];
    CHECK(row.group == "Z7");
    CHECK(row.r == 2);
    CHECK(row.s == 3);
    CHECK(row.outcome == TaskOutcome::Found);
    CHECK(row.method.rfind("search:", 0) == 0);
    CHECK(row.candidates == 3);
    CHECK(row.found_count == 3);
    CHECK(report.found.size() == 3);

    auto records = load_catalog(catalog_path);
    REQUIRE(records.size() == 3);
    for (const auto& rec : records) {
        CHECK(rec.group == "Z7");
        CHECK(rec.r == 2);
        CHECK(rec.s == 3);
        CHECK(rec.lambda == 1);
        CHECK(rec.v == 1);
        auto line = to_json_line(rec);
        auto parsed = catalog_record_from_json(line);
        CHECK(parsed == rec);
        CHECK(to_json_line(parsed) == line);
    }

    // equal runs compare equal: the CSV carries no timing or timestamps
    CampaignConfig again = config;
    again.catalog_path.clear();
    CHECK(campaign_report_csv(run_campaign(again)) ==
          campaign_report_csv(run_campaign(again)));

    auto csv = campaign_report_csv(report);
    CHECK(csv.rfind("group,order,r,s,lambda,outcome,method,candidates,found",
                    0) == 0);
    CHECK(csv.find("Z7,7,2,3,1,found,search:") != std::string::npos);

    auto table = campaign_report_table(report);
    CHECK(table.find("Z7") != std::string::npos);
    CHECK(table.find("(2,3;1)") != std::string::npos);
    CHECK(table.find("searches launched: 1") != std::string::npos);
    CHECK(table.find("pairs found: 3") != std::string::npos);
}

TEST_CASE("campaign budget produces checkpoints that resume") {
    auto dir = scratch_dir();

    CampaignConfig config;
    config.groups = {GroupSpec::parse("Z33")};
    config.include_cyclic = true;
    config.task_budget_seconds = 1e-9;
    config.checkpoint_dir = dir.string();

    auto report = run_campaign(config);
    CHECK(report.complete);  // budget exhaustion is not a stop request
    REQUIRE(report.rows.size() == 2);
    for (const auto& row : report.rows) {
        CHECK(row.outcome == TaskOutcome::Incomplete);
        CHECK(row.candidates == 0);
    }

    auto first = dir / "Z33_r2_s16_l1.json";
    auto second = dir / "Z33_r4_s8_l1.json";
    REQUIRE(std::filesystem::exists(first));
    REQUIRE(std::filesystem::exists(second));

    auto loaded = load_checkpoint(first.string());
    REQUIRE(loaded.has_value());
    auto [task, cursor] = *loaded;
    CHECK(task.group.name() == "Z33");
    CHECK(task.r == 2);
    CHECK(task.s == 16);
    CHECK(task.lambda == 1);
    CHECK(task.resume == cursor);
    CHECK(cursor == EnumerationCursor{0, 0, 0});

    auto resumed = search(task);
    CHECK(resumed.exhaustive);
    CHECK(resumed.candidates_tested == 16);
    CHECK(resumed.found.size() >= 1);
}

TEST_CASE("a stop request halts the campaign") {
    CampaignConfig config;
    config.groups = {GroupSpec::parse("Z7")};
    config.include_cyclic = true;

    request_search_stop();
    auto report = run_campaign(config);
    clear_search_stop();

    CHECK_FALSE(report.complete);
    auto table = campaign_report_table(report);
    CHECK(table.find("campaign stopped before completion") != std::string::npos);
}

TEST_CASE("catalog records") {
    auto rec = make_catalog_record(z7_pair(), SearchStrategy::OrbitReduced,
                                   MateAlgorithm::Sparse, 2.5, 1700000000);
    CHECK(rec.group == "Z7");
    CHECK(rec.r == 2);
    CHECK(rec.s == 3);
    CHECK(rec.lambda == 1);
    CHECK(rec.a == std::vector<std::vector<std::uint32_t>>{{1}, {6}});
    CHECK(rec.b == std::vector<std::vector<std::uint32_t>>{{0}, {3}, {4}});
    CHECK(rec.elapsed_ms == 2.5);
    CHECK(rec.timestamp == 1700000000);
    CHECK(rec.v == 1);

    auto line = to_json_line(rec);
    CHECK(line.rfind("{\"a\":[[1],[6]],\"algorithm\":", 0) == 0);
    CHECK(line.find("\"v\":1}") == line.size() - 6);
    auto parsed = catalog_record_from_json(line);
    CHECK(parsed == rec);
    CHECK(to_json_line(parsed) == line);

    CHECK_THROWS_AS(catalog_record_from_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(catalog_record_from_json("not json"), std::runtime_error);
    auto wrong_version = line;
    wrong_version.replace(wrong_version.find("\"v\":1"), 5, "\"v\":2");
    CHECK_THROWS_AS(catalog_record_from_json(wrong_version), std::runtime_error);
}

TEST_CASE("catalog files") {
    auto dir = scratch_dir();
    auto path = (dir / "cat.jsonl").string();
    auto rec = make_catalog_record(z7_pair(), SearchStrategy::Plain,
                                   MateAlgorithm::Dense, 1.0, 1700000001);

    append_catalog(path, {rec});
    append_catalog(path, {rec});
    CHECK(load_catalog(path).size() == 2);

    {
        std::ofstream out(path, std::ios::app);
        out << "\n";  // blank lines are skipped
    }
    CHECK(load_catalog(path).size() == 2);

    {
        std::ofstream out(path, std::ios::app);
        out << "{\"broken\": true}\n";
    }
    CHECK_THROWS_AS(load_catalog(path), std::runtime_error);

    // records are re-verified on load
    auto bad_path = (dir / "bad.jsonl").string();
    auto broken = rec;
    broken.b = {{0}, {3}, {5}};
    append_catalog(bad_path, {broken});
    try {
        load_catalog(bad_path);
        FAIL("expected a verification error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("verification") != std::string::npos);
    }

    CHECK_THROWS_AS(load_catalog((dir / "missing.jsonl").string()),
                    std::runtime_error);
}

TEST_CASE("checkpoint round trip") {
    SearchTask task;
    task.group = GroupSpec::parse("Z3xZ9");
    task.r = 2;
    task.s = 13;
    task.strategy = SearchStrategy::Plain;
    EnumerationCursor cursor{1, 2, 3};

    auto text = checkpoint_to_json(task, cursor);
    auto [parsed, parsed_cursor] = checkpoint_from_json(text);
    CHECK(parsed.group == task.group);
    CHECK(parsed.r == task.r);
    CHECK(parsed.s == task.s);
    CHECK(parsed.lambda == task.lambda);
    CHECK(parsed.strategy == task.strategy);
    CHECK_FALSE(parsed.assume_symmetric.has_value());
    CHECK(parsed_cursor == cursor);
    CHECK(parsed.resume == cursor);
    CHECK(checkpoint_to_json(parsed, parsed_cursor) == text);

    task.assume_symmetric = false;
    auto text2 = checkpoint_to_json(task, cursor);
    auto [parsed2, cursor2] = checkpoint_from_json(text2);
    REQUIRE(parsed2.assume_symmetric.has_value());
    CHECK(*parsed2.assume_symmetric == false);

    CHECK_THROWS(checkpoint_from_json("not a checkpoint"));
}

TEST_CASE("checkpoint files are written atomically") {
    auto dir = scratch_dir();
    auto path = (dir / "task.json").string();

    SearchTask task;
    task.group = GroupSpec::parse("Z33");
    task.r = 4;
    task.s = 8;
    EnumerationCursor cursor{0, 0, 57};

    save_checkpoint(path, task, cursor);
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));

    auto loaded = load_checkpoint(path);
    REQUIRE(loaded.has_value());
    CHECK(loaded->first.group == task.group);
    CHECK(loaded->second == cursor);

    CHECK_FALSE(load_checkpoint((dir / "absent.json").string()).has_value());
}

TEST_CASE("reference pairs of index 2") {
    const auto& rows = reference_pairs_r4();
    REQUIRE(rows.size() == 9);

    const char* expected_groups[] = {"Z3xZ3",    "Z5xZ5",    "Z3xZ9",
                                     "Z5xZ3xZ3", "Z7xZ7",    "Z7xZ3xZ3",
                                     "Z5xZ5xZ3", "Z9xZ9",    "Z3xZ27"};
    const std::uint32_t expected_s[] = {4, 12, 13, 22, 24, 31, 37, 40, 40};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        CHECK(std::string(row.group) == expected_groups[i]);
        CHECK(row.r == 4);
        CHECK(row.s == expected_s[i]);
        CHECK(row.a.size() == 4);
        CHECK(row.b.size() == row.s);

        auto g = GroupSpec::parse(row.group);
        CHECK_FALSE(g.is_cyclic());
        auto a = GroupSubset::from_coords(g, row.a);
        auto b = GroupSubset::from_coords(g, row.b);
        CHECK(a.size() == row.a.size());
        CHECK(b.size() == row.b.size());
        CHECK(verify(g, a, b, 2));
        CHECK(2 * (g.order() - 1) == std::uint64_t(row.r) * row.s);
    }

    CHECK(rows[0].a == std::vector<std::vector<std::uint32_t>>{
                           {0, 1}, {1, 0}, {0, 2}, {2, 0}});
    CHECK(rows[0].b == std::vector<std::vector<std::uint32_t>>{
                           {1, 1}, {1, 2}, {2, 1}, {2, 2}});

    // verification really can fail: perturb one element of row 1
    auto g = GroupSpec::parse(rows[0].group);
    auto mutated = rows[0].b;
    mutated[0] = {0, 1};
    CHECK_FALSE(verify(g, GroupSubset::from_coords(g, rows[0].a),
                       GroupSubset::from_coords(g, mutated), 2));
}

TEST_CASE("reference pair reproduction report") {
    std::ostringstream out;
    CHECK(table3_reproduce(out) == 0);
    auto text = out.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.rfind("row 1 Z3xZ3 (4,4;2): pass", 0) == 0);
    CHECK(text.find("row 9 Z3xZ27 (4,40;2): pass") != std::string::npos);
}

TEST_CASE("mate benchmark harness") {
    auto g = GroupSpec::parse("Z7");
    auto res = bench_mate(g, GroupSubset::from_indices(g, {0, 3}), 1, 2);
    CHECK(res.agree);
    CHECK(res.dense.found());
    CHECK(res.sparse.found());
    CHECK(res.dense.mate->indices() == std::vector<ElementIndex>{1, 2, 3});
    CHECK(res.sparse.mate->indices() == std::vector<ElementIndex>{1, 2, 3});
    CHECK(res.dense_ms >= 0);
    CHECK(res.sparse_ms >= 0);
    CHECK(res.ratio > 0);
}
