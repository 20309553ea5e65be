#include "nearfact/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "nearfact/coset.hpp"

namespace nearfact {

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> prime_powers(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void partitions_of(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(n - part, part, cur, out);
        cur.pop_back();
    }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("order must be at least 2");
    std::vector<std::vector<std::vector<unsigned>>> per_prime;  // partitions of each exponent
    std::vector<std::uint64_t> primes;
    for (auto [p, e] : prime_powers(n)) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        partitions_of(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
        primes.push_back(p);
    }

    std::vector<GroupSpec> groups;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<std::uint32_t> factors;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            for (unsigned part : per_prime[i][pick[i]])
                factors.push_back(static_cast<std::uint32_t>(ipow(primes[i], part)));
        std::sort(factors.begin(), factors.end());
        groups.emplace_back(factors);

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_prime[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    std::sort(groups.begin(), groups.end(),
              [](const GroupSpec& a, const GroupSpec& b) { return a.factors() < b.factors(); });
    return groups;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> nontrivial_splits(std::uint64_t order,
                                                                       std::uint32_t lambda) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const std::uint64_t target = std::uint64_t{lambda} * (order - 1);
    for (std::uint64_t r = 2; r * r <= target; ++r) {
        if (target % r) continue;
        std::uint64_t s = target / r;
        if (s <= order)
            out.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s));
    }
    return out;
}

const char* to_string(TaskOutcome outcome) {
    switch (outcome) {
        case TaskOutcome::RuledOut: return "ruled-out";
        case TaskOutcome::NoneFound: return "none-found";
        case TaskOutcome::Found: return "found";
        case TaskOutcome::Incomplete: return "incomplete";
        case TaskOutcome::SkippedCyclic: return "skipped-cyclic";
        case TaskOutcome::NoSplits: return "no-splits";
    }
    return "?";
}

CampaignReport run_campaign(const CampaignConfig& config) {
    std::vector<GroupSpec> targets = config.groups;
    if (targets.empty()) {
        for (std::uint64_t n = std::max<std::uint64_t>(2, config.order_min); n <= config.order_max; ++n)
            for (auto& g : abelian_groups_of_order(n)) targets.push_back(std::move(g));
    }

    CampaignReport report;
    std::vector<CatalogRecord> new_records;
    bool stopped = false;

    for (const GroupSpec& g : targets) {
        if (stopped) break;
        if (g.is_cyclic() && !config.include_cyclic) {
            CampaignRow row;
            row.group = g.name();
            row.order = g.order();
            row.outcome = TaskOutcome::SkippedCyclic;
            report.rows.push_back(std::move(row));
            continue;
        }
        for (std::uint32_t lambda : config.lambdas) {
            if (stopped) break;
            auto splits = nontrivial_splits(g.order(), lambda);
            if (config.only_r)
                std::erase_if(splits, [&](const auto& rs) { return rs.first != *config.only_r; });
            if (splits.empty()) {
                CampaignRow row;
                row.group = g.name();
                row.order = g.order();
                row.lambda = lambda;
                row.outcome = TaskOutcome::NoSplits;
                report.rows.push_back(std::move(row));
                continue;
            }
            for (auto [r, s] : splits) {
                if (search_stop_requested()) {
                    report.complete = false;
                    stopped = true;
                    break;
                }
                SearchTask task;
                task.group = g;
                task.r = r;
                task.s = s;
                task.lambda = lambda;
                task.strategy = config.strategy;
                if (task.strategy == SearchStrategy::Coset2x2 &&
                    !coset_search_applicable(g, r, s, lambda))
                    task.strategy = SearchStrategy::OrbitReduced;
                task.workers = config.workers;
                task.budget_seconds = config.task_budget_seconds;

                SearchReport sr = search(task);

                CampaignRow row;
                row.group = g.name();
                row.order = g.order();
                row.r = r;
                row.s = s;
                row.lambda = lambda;
                row.candidates = sr.candidates_tested;
                row.found_count = sr.found.size();
                row.seconds = sr.wall_seconds;

                const CriterionVerdict* fired = nullptr;
                for (const auto& v : sr.filter_verdicts)
                    if (v.ruled_out()) {
                        fired = &v;
                        break;
                    }
                if (fired) {
                    row.outcome = TaskOutcome::RuledOut;
                    row.method = std::string("filter:") + to_string(fired->id);
                } else {
                    ++report.searches_launched;
                    row.method = std::string("search:") + to_string(task.strategy);
                    if (!sr.found.empty())
                        row.outcome = TaskOutcome::Found;
                    else if (sr.exhaustive)
                        row.outcome = TaskOutcome::NoneFound;
                    else
                        row.outcome = TaskOutcome::Incomplete;

                    for (const auto& nf : sr.found) {
                        report.found.push_back(nf);
                        new_records.push_back(make_catalog_record(nf, task.strategy, MateAlgorithm::Sparse,
                                                                  sr.wall_seconds * 1000.0,
                                                                  static_cast<std::int64_t>(std::time(nullptr))));
                    }
                    if (row.outcome == TaskOutcome::Incomplete && !config.checkpoint_dir.empty() &&
                        sr.checkpoint) {
                        std::filesystem::create_directories(config.checkpoint_dir);
                        std::string file = config.checkpoint_dir + "/" + g.name() + "_r" + std::to_string(r) +
                                           "_s" + std::to_string(s) + "_l" + std::to_string(lambda) + ".json";
                        save_checkpoint(file, task, *sr.checkpoint);
                    }
                }
                report.rows.push_back(std::move(row));
            }
        }
    }

    if (!new_records.empty() && !config.catalog_path.empty()) append_catalog(config.catalog_path, new_records);
    return report;
}

std::string campaign_report_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "group,order,r,s,lambda,outcome,method,candidates,found\n";
    for (const auto& row : report.rows)
        out << row.group << ',' << row.order << ',' << row.r << ',' << row.s << ',' << row.lambda << ','
            << to_string(row.outcome) << ',' << row.method << ',' << row.candidates << ','
            << row.found_count << '\n';
    return out.str();
}

std::string campaign_report_table(const CampaignReport& report) {
    std::size_t name_width = 5;
    for (const auto& row : report.rows) name_width = std::max(name_width, row.group.size());

    std::ostringstream out;
    auto pad = [&](const std::string& text, std::size_t width) {
        out << text;
        for (std::size_t i = text.size(); i < width; ++i) out << ' ';
    };
    pad("group", name_width + 2);
    pad("(r,s;lambda)", 16);
    pad("outcome", 16);
    out << "method\n";
    for (const auto& row : report.rows) {
        pad(row.group, name_width + 2);
        std::string split = row.r == 0 ? std::string("-")
                                       : "(" + std::to_string(row.r) + "," + std::to_string(row.s) + ";" +
                                             std::to_string(row.lambda) + ")";
        pad(split, 16);
        pad(to_string(row.outcome), 16);
        out << row.method << '\n';
    }
    out << "searches launched: " << report.searches_launched << '\n';
    out << "pairs found: " << report.found.size() << '\n';
    if (!report.complete) out << "campaign stopped before completion\n";
    return out.str();
}

MateBenchResult bench_mate(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                           unsigned repetitions) {
    using clock = std::chrono::steady_clock;
    repetitions = std::max(1u, repetitions);
    MateBenchResult result;

    auto time_best = [&](MateAlgorithm alg, MateResult& res) {
        double best = 0;
        for (unsigned i = 0; i < repetitions; ++i) {
            auto t0 = clock::now();
            res = compute_mate(group, a, lambda, alg);
            double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            if (i == 0 || ms < best) best = ms;
        }
        return best;
    };
    result.dense_ms = time_best(MateAlgorithm::Dense, result.dense);
    result.sparse_ms = time_best(MateAlgorithm::Sparse, result.sparse);
    result.ratio = result.dense_ms / std::max(result.sparse_ms, 1e-9);
    result.agree = result.dense.tag == result.sparse.tag &&
                   result.dense.mate.has_value() == result.sparse.mate.has_value() &&
                   (!result.dense.mate || *result.dense.mate == *result.sparse.mate);
    return result;
}

}  // namespace nearfact
