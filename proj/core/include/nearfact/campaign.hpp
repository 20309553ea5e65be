#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearfact/catalog.hpp"
#include "nearfact/search.hpp"

namespace nearfact {

/// One representative per isomorphism class of abelian groups of order n,
/// built from partitions of each prime's exponent.  Factors are the primary
/// components, ascending, so Z36 appears as Z4xZ9 and the noncyclic
/// order-36 groups as Z2xZ2xZ9, Z3xZ3xZ4, Z2xZ2xZ3xZ3.
std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n);

/// (r, s) with 2 <= r <= s <= n and r*s = lambda*(n-1), ascending in r.
std::vector<std::pair<std::uint32_t, std::uint32_t>> nontrivial_splits(std::uint64_t order,
                                                                       std::uint32_t lambda);

struct CampaignConfig {
    std::vector<GroupSpec> groups;  // explicit targets; otherwise the order range below
    std::uint64_t order_min = 0;
    std::uint64_t order_max = 0;
    bool include_cyclic = false;  // cyclic groups are listed as skipped unless requested
    std::vector<std::uint32_t> lambdas{1};
    std::optional<std::uint32_t> only_r;  // keep only splits whose smaller size is r
    SearchStrategy strategy = SearchStrategy::OrbitReduced;
    unsigned workers = 1;
    double task_budget_seconds = 600;
    std::string catalog_path;     // append found pairs here (empty = no persistence)
    std::string checkpoint_dir;   // write per-task checkpoints here on timeout
};

enum class TaskOutcome {
    RuledOut,       // a criterion excluded the split, no enumeration
    NoneFound,      // exhaustive search, empty
    Found,          // at least one pair
    Incomplete,     // budget or stop request hit; checkpoint captured
    SkippedCyclic,  // group not searched (cyclic targets excluded by config)
    NoSplits,       // lambda*(n-1) admits no split with both sizes >= 2
};
const char* to_string(TaskOutcome outcome);

struct CampaignRow {
    std::string group;
    std::uint64_t order = 0;
    std::uint32_t r = 0;
    std::uint32_t s = 0;
    std::uint32_t lambda = 1;
    TaskOutcome outcome = TaskOutcome::NoneFound;
    std::string method;  // "filter:<criterion>" or "search:<strategy>"
    std::uint64_t candidates = 0;
    std::uint64_t found_count = 0;
    double seconds = 0;
};

struct CampaignReport {
    std::vector<CampaignRow> rows;
    std::uint64_t searches_launched = 0;
    std::vector<NearFactorization> found;
    bool complete = true;  // false when a stop request ended the campaign early
};

/// Runs every configured (group, r, s, lambda) task: criteria first, search
/// only when no filter fires.  Tasks hitting the per-task budget are marked
/// incomplete (with a checkpoint file when checkpoint_dir is set) and the
/// campaign moves on.
CampaignReport run_campaign(const CampaignConfig& config);

/// group,order,r,s,lambda,outcome,method,candidates,found columns; timing is
/// deliberately left out so reports of equal runs compare equal.
std::string campaign_report_csv(const CampaignReport& report);
std::string campaign_report_table(const CampaignReport& report);

/// The nine reference (4, s, 2) pairs in noncyclic groups of odd order <= 81.
struct ReferencePair {
    const char* group;
    std::uint32_t r;
    std::uint32_t s;
    std::vector<std::vector<std::uint32_t>> a;
    std::vector<std::vector<std::uint32_t>> b;
};
const std::vector<ReferencePair>& reference_pairs_r4();

/// Re-verifies each reference pair as an index-2 near-factorization and
/// prints one verdict line per row.  Returns the number of failing rows.
int table3_reproduce(std::ostream& out);

struct MateBenchResult {
    double dense_ms = 0;
    double sparse_ms = 0;
    double ratio = 0;  // dense_ms / sparse_ms
    bool agree = false;
    MateResult dense;
    MateResult sparse;
};

/// Times both mate algorithms on one input (best of `repetitions` runs each)
/// and checks that they return the same tag and mate.
MateBenchResult bench_mate(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                           unsigned repetitions = 3);

}  // namespace nearfact
