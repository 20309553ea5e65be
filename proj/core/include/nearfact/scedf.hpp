#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearfact/group.hpp"

namespace nearfact {

/// m pairwise disjoint subsets of a group, all of one size ell.
struct DifferenceFamily {
    GroupSpec group;
    std::vector<GroupSubset> sets;
    std::uint32_t ell = 0;
    std::uint32_t lambda = 1;
};

/// Counts of y - x over y in b, x in a, indexed by group element.
std::vector<std::uint64_t> difference_multiset(const GroupSpec& group, const GroupSubset& b,
                                               const GroupSubset& a);

/// Circular external difference family check: the sets are disjoint, share
/// size ell, and every circularly consecutive difference multiset
/// D(A_{j+1}, A_j) covers each nonzero element exactly lambda times.
/// On failure, *reason (when given) says which requirement broke.
bool is_scedf(const DifferenceFamily& family, std::string* reason = nullptr);

/// Given a 2-set family (A_1, A_2) whose two circular conditions hold, a
/// third set C would need D(C, A_2) and D(A_1, C) both perfect, forcing
/// (A_1, -C) and (-A_2, ...) into near-factorizations.  Since -A_2 already
/// has A_1 as its unique mate, the forced C coincides with A_1 and can never
/// be disjoint from it.  Returns true when that collision is confirmed
/// computationally.  Throws if (A_1, -A_2) is not a lambda near-factorization
/// to begin with.
bool circular_extension_is_blocked(const GroupSpec& group, const GroupSubset& a1, const GroupSubset& a2,
                                   std::uint32_t lambda);

/// The two-set family (squares, non-squares) in Z_q for a prime
/// q = 1 (mod 4); it satisfies the circular conditions with
/// lambda = (q-1)/4.
DifferenceFamily quadratic_residue_family(std::uint32_t q);

}  // namespace nearfact
