#pragma once

#include <cstdint>
#include <vector>

namespace nearfact {

/// C(n, k), saturating at UINT64_MAX.  Ranks handled by the enumeration code
/// stay exact because a stream is only ever advanced one candidate at a time.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// k-subsets of {0..n-1} in lexicographic order, represented ascending.
/// Returns false (and leaves the first combination) when wrapping past the end.
bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n);

std::uint64_t combination_rank(const std::vector<std::uint32_t>& combo, std::uint32_t n);
std::vector<std::uint32_t> combination_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k);

}  // namespace nearfact
