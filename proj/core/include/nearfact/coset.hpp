#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nearfact/group.hpp"
#include "nearfact/search.hpp"

namespace nearfact {

/// How a pair (A, B) with |A| = 1 (mod 4) and |B| = 3 (mod 4) can distribute
/// its elements over the four Z_t cosets of G = Z_t x Z_2 x Z_2 (t odd).
/// Cells are indexed 2*i + j for coset (i, j) of the two order-2 coordinates.
/// Exactly one cell (the exceptional one) carries counts (|A|+3)/4 and
/// (|B|-3)/4; the other three carry (|A|-1)/4 and (|B|+1)/4.  In each cell
/// exactly one side has an odd count, and that side holds the involution
/// (0, i, j); the rest of the cell splits into pairs {(x,i,j), (t-x,i,j)}.
struct CosetDistribution {
    std::array<std::uint32_t, 4> a{};  // the side of size = 1 (mod 4)
    std::array<std::uint32_t, 4> b{};
    unsigned exceptional_cell = 0;

    bool involution_in_a(unsigned cell) const { return a[cell] % 2 == 1; }
};

/// All solutions of the cell-count equations
///   sum_c a(c) b(c + d) = t - 1 for d = 0 and t otherwise,
/// with the a's summing to whichever of r, s is 1 (mod 4) and the b's to the
/// other.  Requires G of the shape Z_t x Z_2 x Z_2 (t odd, any factor order)
/// and r, s >= 2 with r*s = 4t - 1.
std::vector<CosetDistribution> admissible_coset_distributions(const GroupSpec& group, std::uint32_t r,
                                                              std::uint32_t s);

/// True when coset_structured_search accepts this task: group of the shape
/// Z_t x Z_2 x Z_2 with t odd, lambda 1, and r, s >= 2.
bool coset_search_applicable(const GroupSpec& group, std::uint32_t r, std::uint32_t s,
                             std::uint32_t lambda);

/// Structured search over symmetric pairs that respect a coset distribution.
/// Only the two distributions inequivalent under GL(2,2) relabelling of the
/// nonzero cells are enumerated (exceptional cell (0,0) or (0,1)), and in the
/// first pair-carrying cell the smallest chosen pair label is normalised to a
/// minimum of its orbit under the units of Z_t.  Lambda must be 1.
SearchReport coset_structured_search(const SearchTask& task);

}  // namespace nearfact
