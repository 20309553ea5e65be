#include "nearfact/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace nearfact {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n) {
    std::uint32_t k = static_cast<std::uint32_t>(combo.size());
    if (k == 0) return false;
    std::uint32_t i = k;
    while (i-- > 0) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::uint32_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    for (std::uint32_t j = 0; j < k; ++j) combo[j] = j;
    return false;
}

std::uint64_t combination_rank(const std::vector<std::uint32_t>& combo, std::uint32_t n) {
    std::uint32_t k = static_cast<std::uint32_t>(combo.size());
    std::uint64_t rank = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t v = prev; v < combo[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
        prev = combo[i] + 1;
    }
    return rank;
}

std::vector<std::uint32_t> combination_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
    if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
    std::vector<std::uint32_t> combo(k);
    std::uint32_t v = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        combo[i] = v++;
    }
    return combo;
}

}  // namespace nearfact
