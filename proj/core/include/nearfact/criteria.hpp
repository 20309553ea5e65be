#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearfact/group.hpp"

namespace nearfact {

enum class CriterionId {
    SmallA,
    ThreePPlusOne,
    ExponentQuotient,
    SpecialForm,
    QuotientCongruence,
    Pecher
};

enum class CriterionOutcome { RuledOut, Inconclusive };

struct CriterionVerdict {
    CriterionId id;
    CriterionOutcome outcome;
    std::string details;  // human-readable witness, e.g. "d=6, |H|=24"

    bool ruled_out() const { return outcome == CriterionOutcome::RuledOut; }
};

const char* to_string(CriterionId id);

/// All criteria below address index-1 splits r*s = n-1 with r, s >= 2.
/// Trivial splits (min(r,s) = 1) and lambda > 1 are out of scope and come
/// back Inconclusive.  Each criterion is a pure function of (G, r, s); none
/// ever rules out a cyclic group's split.

/// Noncyclic G admits no near-factorization with min(r,s) <= 4.
CriterionVerdict small_a_criterion(const GroupSpec& group, std::uint32_t r, std::uint32_t s);

/// For |G| = 3p+1 with p prime, every noncyclic split dies; subsumed by
/// SmallA because the splits of 3p force min(r,s) in {1,3}.
CriterionVerdict three_p_plus_one_criterion(const GroupSpec& group, std::uint32_t r,
                                            std::uint32_t s);

/// For d in {2,3,4,6}, G maps onto a quotient H of exponent dividing d with
/// |H| = prod gcd(n_i, d); any near-factorization needs min(r,s) >= |H| - 1
/// (both orderings via the abelian swap).  Fires with the largest such H.
CriterionVerdict exponent_quotient_bound(const GroupSpec& group, std::uint32_t r, std::uint32_t s);

/// Groups whose primary components all lie in {2,3} or all in {2,4} have no
/// nontrivial near-factorization, independent of the split.
CriterionVerdict special_form(const GroupSpec& group);

/// For each prime p with m = elementary_p_quotient_rank(G, p) >= 1:
/// odd p requires r^(p-1) == s^(p-1) == 1 (mod p^m); p = 2 requires
/// r == -s == +-1 (mod 2^m).
CriterionVerdict quotient_congruence(const GroupSpec& group, std::uint32_t r, std::uint32_t s);

/// If the 2-primary part has at least two components and one of exponent
/// >= 2 (i.e. Z_{2m} x Z_{4n} x G'), then r and s cannot be congruent to
/// +-3 mod 8.
CriterionVerdict pecher_criterion(const GroupSpec& group, std::uint32_t r, std::uint32_t s);

/// Runs every criterion in a fixed order.  lambda != 1 bypasses them all.
std::vector<CriterionVerdict> evaluate_all(const GroupSpec& group, std::uint32_t r,
                                           std::uint32_t s, std::uint32_t lambda = 1);

}  // namespace nearfact
