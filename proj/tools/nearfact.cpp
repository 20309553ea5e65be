// Command line front end: mate computation, verification, filtered searches,
// SCEDF checks, campaigns over whole order ranges, and the reference-table
// reproductions.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nearfact/campaign.hpp"
#include "nearfact/catalog.hpp"
#include "nearfact/criteria.hpp"
#include "nearfact/group.hpp"
#include "nearfact/mate.hpp"
#include "nearfact/scedf.hpp"
#include "nearfact/search.hpp"

using nlohmann::json;
using namespace nearfact;

namespace {

extern "C" void on_interrupt(int) { request_search_stop(); }

void arm_interrupt() {
    clear_search_stop();
    std::signal(SIGINT, on_interrupt);
}

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Accepts "0,3,17" (element indices) or "(1,0,1),(22,0,1)" (coordinate
// tuples, one entry per factor).
GroupSubset parse_set(const GroupSpec& group, const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw CLI::ValidationError("set", "empty set literal");
    if (s.front() == '(') {
        std::vector<std::vector<std::uint32_t>> coords;
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') throw CLI::ValidationError("set", "expected '(' in " + text);
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos)
                throw CLI::ValidationError("set", "unbalanced parentheses in " + text);
            std::vector<std::uint32_t> tuple;
            std::stringstream ss(s.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(ss, item, ','))
                tuple.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            coords.push_back(std::move(tuple));
            pos = close + 1;
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        return GroupSubset::from_coords(group, coords);
    }
    std::vector<ElementIndex> indices;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        indices.push_back(static_cast<ElementIndex>(std::stoul(item)));
    return GroupSubset::from_indices(group, indices);
}

json subset_json(const GroupSubset& s) {
    json arr = json::array();
    for (const auto& tuple : s.coords()) arr.push_back(tuple);
    return arr;
}

unsigned effective_workers(unsigned from_flag) {
    if (const char* env = std::getenv("NEARFACT_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring unusable NEARFACT_WORKERS value '" << env << "'\n";
    }
    return from_flag;
}

void print_verdicts(const std::vector<CriterionVerdict>& verdicts) {
    for (const auto& v : verdicts) {
        std::cout << to_string(v.id) << ": "
                  << (v.outcome == CriterionOutcome::RuledOut ? "ruled-out" : "inconclusive");
        if (!v.details.empty()) std::cout << " -- " << v.details;
        std::cout << "\n";
    }
}

int run_mate(const std::string& group_name, const std::string& set_text, std::uint32_t lambda,
             const std::string& algorithm) {
    GroupSpec g = GroupSpec::parse(group_name);
    GroupSubset a = parse_set(g, set_text);
    MateAlgorithm alg = algorithm == "dense" ? MateAlgorithm::Dense : MateAlgorithm::Sparse;

    auto t0 = std::chrono::steady_clock::now();
    MateResult res = compute_mate(g, a, lambda, alg);
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    json out;
    out["group"] = g.name();
    out["A"] = subset_json(a);
    out["B"] = res.mate ? subset_json(*res.mate) : json(nullptr);
    out["lambda"] = lambda;
    out["algorithm"] = algorithm;
    out["elapsed_ms"] = elapsed_ms;

    if (res.found())
        std::cout << "mate of " << a.to_string() << " in " << g.name() << ": "
                  << res.mate->to_string() << "\n";
    else
        std::cout << "no mate of " << a.to_string() << " in " << g.name() << ": "
                  << to_string(res.tag) << "\n";
    std::cout << out.dump() << "\n";
    return res.found() ? 0 : 1;
}

int run_verify(const std::string& group_name, const std::string& a_text, const std::string& b_text,
               std::uint32_t lambda) {
    GroupSpec g = GroupSpec::parse(group_name);
    GroupSubset a = parse_set(g, a_text);
    GroupSubset b = parse_set(g, b_text);
    bool ok = verify(g, a, b, lambda);
    if (ok)
        std::cout << "valid (" << a.size() << "," << b.size() << ";" << lambda
                  << ") near-factorization of " << g.name() << "\n";
    else
        std::cout << "not a near-factorization at lambda " << lambda << "\n";
    return ok ? 0 : 1;
}

int append_found(const std::string& catalog_path, const SearchReport& report) {
    if (catalog_path.empty() || report.found.empty()) return 0;
    std::vector<CatalogRecord> records;
    for (const auto& nf : report.found)
        records.push_back(make_catalog_record(nf, report.task.strategy, MateAlgorithm::Sparse,
                                              report.wall_seconds * 1000.0,
                                              static_cast<std::int64_t>(std::time(nullptr))));
    append_catalog(catalog_path, records);
    std::cout << records.size() << " record(s) appended to " << catalog_path << "\n";
    return 0;
}

int run_search(SearchTask task, const CLI::App* cmd, const std::string& resume_path,
               const std::string& catalog_path, const std::string& checkpoint_path) {
    if (!resume_path.empty()) {
        auto cp = load_checkpoint(resume_path);
        if (!cp) {
            std::cerr << "cannot load checkpoint " << resume_path << "\n";
            return 1;
        }
        SearchTask resumed = cp->first;
        // command line budget/workers still win when given explicitly
        if (cmd->count("--budget")) resumed.budget_seconds = task.budget_seconds;
        if (cmd->count("--workers")) resumed.workers = task.workers;
        task = resumed;
    }
    task.workers = effective_workers(task.workers);

    arm_interrupt();
    SearchReport report = search(task);

    for (const auto& v : report.filter_verdicts)
        if (v.ruled_out())
            std::cout << "ruled out by " << to_string(v.id) << ": " << v.details << "\n";
    for (const auto& nf : report.found)
        std::cout << "found A=" << nf.a.to_string() << " B=" << nf.b.to_string() << "\n";
    std::cout << "tested " << report.candidates_tested << " candidate(s) in " << std::fixed
              << std::setprecision(2) << report.wall_seconds << "s: " << report.found.size()
              << " pair(s)\n";

    if (report.exhaustive) {
        std::cout << "enumeration exhaustive\n";
        append_found(catalog_path, report);
        return 0;
    }
    std::cout << "enumeration interrupted\n";
    append_found(catalog_path, report);
    if (!checkpoint_path.empty() && report.checkpoint) {
        save_checkpoint(checkpoint_path, task, *report.checkpoint);
        std::cout << "checkpoint written to " << checkpoint_path << "\n";
    }
    return 2;
}

int run_filters_single(const std::string& group_name, std::uint32_t r, std::uint32_t s,
                       std::uint32_t lambda) {
    GroupSpec g = GroupSpec::parse(group_name);
    print_verdicts(evaluate_all(g, r, s, lambda));
    return 0;
}

int run_filters_order(std::uint64_t order) {
    std::cout << "group,r,s,verdict-summary\n";
    for (const auto& g : abelian_groups_of_order(order)) {
        for (auto [r, s] : nontrivial_splits(order, 1)) {
            std::string summary = "inconclusive";
            for (const auto& v : evaluate_all(g, r, s, 1))
                if (v.ruled_out()) {
                    summary = std::string("ruled-out:") + to_string(v.id);
                    break;
                }
            std::cout << g.name() << "," << r << "," << s << "," << summary << "\n";
        }
    }
    return 0;
}

int run_scedf(const std::string& group_name, const std::string& sets_text, std::uint32_t lambda) {
    GroupSpec g = GroupSpec::parse(group_name);
    DifferenceFamily family;
    family.group = g;
    family.lambda = lambda;

    std::stringstream ss(sets_text);
    std::string part;
    while (std::getline(ss, part, '|')) family.sets.push_back(parse_set(g, part));
    family.ell = family.sets.empty() ? 0 : static_cast<std::uint32_t>(family.sets[0].size());

    std::string reason;
    bool ok = is_scedf(family, &reason);

    json out;
    out["group"] = g.name();
    out["lambda"] = lambda;
    out["ell"] = family.ell;
    out["m"] = family.sets.size();
    out["scedf"] = ok;
    if (!ok) out["reason"] = reason;
    json diffs = json::array();
    std::size_t m = family.sets.size();
    for (std::size_t j = 0; j < m; ++j) {
        json entry;
        entry["from"] = j;
        entry["to"] = (j + 1) % m;
        entry["histogram"] = difference_multiset(g, family.sets[(j + 1) % m], family.sets[j]);
        diffs.push_back(entry);
    }
    out["differences"] = diffs;

    std::cout << (ok ? "SCEDF: yes" : "SCEDF: no (" + reason + ")") << "\n";
    std::cout << out.dump() << "\n";
    return ok ? 0 : 1;
}

int run_campaign_cmd(CampaignConfig config, const std::string& groups_csv,
                     const std::string& lambdas_csv, const std::string& csv_path) {
    for (std::stringstream ss(groups_csv); ss.good();) {
        std::string name;
        if (std::getline(ss, name, ',') && !name.empty())
            config.groups.push_back(GroupSpec::parse(name));
    }
    if (!lambdas_csv.empty()) {
        config.lambdas.clear();
        for (std::stringstream ss(lambdas_csv); ss.good();) {
            std::string item;
            if (std::getline(ss, item, ',') && !item.empty())
                config.lambdas.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
    }
    config.workers = effective_workers(config.workers);

    arm_interrupt();
    CampaignReport report = run_campaign(config);

    std::cout << campaign_report_table(report);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        out << campaign_report_csv(report);
        std::cout << "csv report written to " << csv_path << "\n";
    }
    return report.complete ? 0 : 2;
}

int run_bench(const std::string& group_name, const std::string& set_text, std::uint32_t lambda,
              unsigned reps) {
    GroupSpec g = GroupSpec::parse(group_name);
    GroupSubset a = parse_set(g, set_text);
    MateBenchResult res = bench_mate(g, a, lambda, reps);
    json out;
    out["dense_ms"] = res.dense_ms;
    out["sparse_ms"] = res.sparse_ms;
    out["ratio"] = res.ratio;
    std::cout << out.dump() << "\n";
    if (!res.agree) {
        std::cerr << "dense and sparse results disagree\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-factorization toolkit for finite abelian groups"};
    app.require_subcommand(1);

    std::string group, set_text, a_text, b_text, sets_text, algorithm = "sparse";
    std::string strategy_name = "orbit-reduced";
    std::string catalog_path, checkpoint_path, resume_path, csv_path, groups_csv, lambdas_csv;
    std::uint32_t r = 0, s = 0, lambda = 1;
    std::uint64_t order = 0;
    bool all_groups = false;
    unsigned workers = 1, reps = 3;
    double budget = 0;
    CampaignConfig config;

    auto* mate_cmd = app.add_subcommand("mate", "compute the unique mate of a candidate set");
    mate_cmd->add_option("--group", group, "group literal, e.g. Z7 or Z23xZ2xZ2")->required();
    mate_cmd->add_option("--set", set_text, "candidate set: indices 0,3 or tuples (1,0),(2,1)")
        ->required();
    mate_cmd->add_option("--lambda", lambda, "multiplicity");
    mate_cmd->add_option("--algorithm", algorithm, "dense or sparse")
        ->check(CLI::IsMember({"dense", "sparse"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a claimed near-factorization");
    verify_cmd->add_option("--group", group)->required();
    verify_cmd->add_option("--a", a_text, "first set")->required();
    verify_cmd->add_option("--b", b_text, "second set")->required();
    verify_cmd->add_option("--lambda", lambda);

    auto* search_cmd = app.add_subcommand("search", "enumerate candidates for one (r,s,lambda) task");
    search_cmd->add_option("--group", group);
    search_cmd->add_option("--r", r);
    search_cmd->add_option("--s", s);
    search_cmd->add_option("--lambda", lambda);
    search_cmd->add_option("--strategy", strategy_name, "plain, orbit-reduced, or coset-2x2");
    search_cmd->add_option("--workers", workers, "worker thread count");
    search_cmd->add_option("--budget", budget, "wall clock budget in seconds (0 = none)");
    search_cmd->add_option("--catalog", catalog_path, "JSON-lines file for found pairs");
    search_cmd->add_option("--checkpoint", checkpoint_path, "file for the cursor on interrupt");
    search_cmd->add_option("--resume", resume_path, "resume from a checkpoint file");

    auto* filters_cmd = app.add_subcommand("filters", "run the nonexistence criteria");
    filters_cmd->add_option("--group", group);
    filters_cmd->add_option("--r", r);
    filters_cmd->add_option("--s", s);
    filters_cmd->add_option("--lambda", lambda);
    filters_cmd->add_option("--order", order, "group order for --all-groups mode");
    filters_cmd->add_flag("--all-groups", all_groups,
                          "CSV over all groups of --order and all splits");

    auto* scedf_cmd = app.add_subcommand("scedf", "check a strong circular external difference family");
    scedf_cmd->add_option("--group", group)->required();
    scedf_cmd->add_option("--sets", sets_text, "sets separated by '|', e.g. \"1,4|2,3\"")->required();
    scedf_cmd->add_option("--lambda", lambda);

    auto* campaign_cmd = app.add_subcommand("campaign", "sweep groups and splits, filters first");
    campaign_cmd->add_option("--order-min", config.order_min);
    campaign_cmd->add_option("--order-max", config.order_max);
    campaign_cmd->add_option("--groups", groups_csv, "explicit comma separated group list");
    campaign_cmd->add_option("--lambda", lambdas_csv, "comma separated lambda list");
    campaign_cmd->add_option("--only-r", r, "keep only splits with smaller side r");
    campaign_cmd->add_flag("--include-cyclic", config.include_cyclic);
    campaign_cmd->add_option("--strategy", strategy_name);
    campaign_cmd->add_option("--workers", config.workers);
    campaign_cmd->add_option("--budget", config.task_budget_seconds, "per-task budget in seconds");
    campaign_cmd->add_option("--catalog", config.catalog_path);
    campaign_cmd->add_option("--checkpoint-dir", config.checkpoint_dir);
    campaign_cmd->add_option("--csv", csv_path, "write the CSV report here");

    auto* table3_cmd = app.add_subcommand("table3", "re-verify the nine reference index-2 pairs");

    auto* bench_cmd = app.add_subcommand("bench", "time dense vs sparse mate computation");
    bench_cmd->add_option("--group", group)->required();
    bench_cmd->add_option("--set", set_text)->required();
    bench_cmd->add_option("--lambda", lambda);
    bench_cmd->add_option("--reps", reps, "repetitions, best time kept");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mate_cmd->parsed()) return run_mate(group, set_text, lambda, algorithm);
        if (verify_cmd->parsed()) return run_verify(group, a_text, b_text, lambda);
        if (search_cmd->parsed()) {
            SearchTask task;
            if (resume_path.empty()) {
                if (group.empty() || r == 0 || s == 0) {
                    std::cerr << "search needs --group, --r and --s (or --resume)\n";
                    return 1;
                }
                task.group = GroupSpec::parse(group);
                task.r = r;
                task.s = s;
                task.lambda = lambda;
                task.strategy = search_strategy_from_string(strategy_name);
            }
            task.workers = workers;
            task.budget_seconds = budget;
            return run_search(task, search_cmd, resume_path, catalog_path, checkpoint_path);
        }
        if (filters_cmd->parsed()) {
            if (all_groups) {
                if (order < 2) {
                    std::cerr << "--all-groups needs --order\n";
                    return 1;
                }
                return run_filters_order(order);
            }
            if (group.empty() || r == 0 || s == 0) {
                std::cerr << "filters needs --group, --r and --s (or --order with --all-groups)\n";
                return 1;
            }
            return run_filters_single(group, r, s, lambda);
        }
        if (scedf_cmd->parsed()) return run_scedf(group, sets_text, lambda);
        if (campaign_cmd->parsed()) {
            if (campaign_cmd->count("--only-r")) config.only_r = r;
            config.strategy = search_strategy_from_string(strategy_name);
            return run_campaign_cmd(config, groups_csv, lambdas_csv, csv_path);
        }
        if (table3_cmd->parsed()) return table3_reproduce(std::cout);
        if (bench_cmd->parsed()) return run_bench(group, set_text, lambda, reps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
