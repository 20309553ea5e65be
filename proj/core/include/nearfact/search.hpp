#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "nearfact/criteria.hpp"
#include "nearfact/group.hpp"
#include "nearfact/mate.hpp"
#include "nearfact/orbits.hpp"

namespace nearfact {

enum class SearchStrategy {
    Plain,         // every subset of the enumerated size
    OrbitReduced,  // symmetric subsets, involution choices reduced by an orbit catalog
    Coset2x2,      // cell-count structured search for Z_t x Z_2 x Z_2
};

const char* to_string(SearchStrategy strategy);
SearchStrategy search_strategy_from_string(std::string_view name);

/// A symmetric r-subset decomposes as i1 involutions plus i2 = (r - i1)/2
/// symmetric pairs {x, -x}.
struct InvolutionProfile {
    std::uint32_t involutions = 0;
    std::uint32_t pairs = 0;
};

/// Profiles with i1 <= t1, i2 <= t2 and i1 = size (mod 2), ascending in i1.
std::vector<InvolutionProfile> feasible_profiles(const GroupSpec& group, std::uint32_t size);

/// Position in a candidate enumeration.  Plain streams only use pair_rank;
/// symmetric streams use all three components.  A cursor always points at the
/// next candidate that would be yielded, so a resumed run continues exactly
/// where the interrupted one stopped.
struct EnumerationCursor {
    std::uint64_t profile_index = 0;
    std::uint64_t involution_rank = 0;
    std::uint64_t pair_rank = 0;
    bool operator==(const EnumerationCursor&) const = default;
};

class CandidateStream {
  public:
    virtual ~CandidateStream() = default;
    /// Next candidate subset, or nullopt once exhausted.
    virtual std::optional<GroupSubset> next() = 0;
    /// Cursor of the candidate the next call to next() would yield.
    virtual EnumerationCursor cursor() const = 0;
    /// Jump to a cursor previously obtained from cursor().
    virtual void seek(const EnumerationCursor& cursor) = 0;
    /// Total number of candidates in the stream (saturating).
    virtual std::uint64_t size_hint() const = 0;
};

/// Symmetric subsets of one involution profile in deterministic order:
/// involution choices ascending (catalog representatives, or combinations of
/// the involution list), pair choices ascending within each.
class SymmetricSubsetStream {
  public:
    SymmetricSubsetStream(const GroupSpec& group, InvolutionProfile profile,
                          std::optional<CatalogBinding> binding = std::nullopt);

    std::optional<GroupSubset> next();
    std::uint64_t involution_rank() const { return involution_rank_; }
    std::uint64_t pair_rank() const { return pair_rank_; }
    void seek(std::uint64_t involution_rank, std::uint64_t pair_rank);
    std::uint64_t involution_choices() const;
    std::uint64_t pair_choices() const;
    bool reduced() const { return binding_.has_value(); }
    bool exhausted() const { return done_; }

  private:
    GroupSpec group_;
    InvolutionProfile profile_;
    std::optional<CatalogBinding> binding_;
    std::vector<ElementIndex> involution_list_;
    std::vector<std::pair<ElementIndex, ElementIndex>> pair_list_;
    std::vector<std::uint32_t> involution_combo_;  // positions, unused under a catalog
    std::vector<std::uint32_t> pair_combo_;
    std::uint64_t involution_rank_ = 0;
    std::uint64_t pair_rank_ = 0;
    bool done_ = false;

    GroupSubset current() const;
    void load_involution_choice();
};

/// All symmetric subsets of the given size: feasible profiles in order, each
/// run through a SymmetricSubsetStream.  With orbit_reduced, profiles for
/// which catalog_for() applies enumerate only involution representatives.
/// A reduced stream still decides emptiness: automorphic images of candidates
/// have mates exactly when the candidates themselves do.
std::unique_ptr<CandidateStream> make_candidate_stream(const GroupSpec& group, std::uint32_t subset_size,
                                                       bool symmetric, bool orbit_reduced);

struct SearchTask {
    GroupSpec group;
    std::uint32_t r = 1;
    std::uint32_t s = 1;
    std::uint32_t lambda = 1;
    SearchStrategy strategy = SearchStrategy::OrbitReduced;
    /// Restrict to symmetric candidates.  Defaults to lambda == 1, where the
    /// restriction loses nothing: if any (r,s) pair exists, a symmetric one
    /// does.
    std::optional<bool> assume_symmetric;
    std::optional<EnumerationCursor> resume;
    double budget_seconds = 0;  // 0 = no limit
    unsigned workers = 1;

    bool symmetric_enumeration() const { return assume_symmetric.value_or(lambda == 1); }
};

struct SearchReport {
    SearchTask task;
    std::vector<CriterionVerdict> filter_verdicts;
    std::uint64_t candidates_tested = 0;
    std::vector<NearFactorization> found;
    /// True when the task is settled: a filter ruled it out or the
    /// enumeration ran to completion.
    bool exhaustive = false;
    /// First unprocessed position, present exactly when not exhaustive.
    std::optional<EnumerationCursor> checkpoint;
    double wall_seconds = 0;
};

/// Runs criteria filters, then enumerates candidates for the smaller of the
/// two sizes and asks the mate solver for each.  Deterministic for any worker
/// count: chunks of candidates are handed out in stream order and results are
/// merged back in that order.
SearchReport search(const SearchTask& task);

/// Cooperative cancellation for long searches (e.g. wired to SIGINT).  The
/// flag is sticky; clear it before reusing the process for another search.
void request_search_stop();
void clear_search_stop();
bool search_stop_requested();

}  // namespace nearfact
