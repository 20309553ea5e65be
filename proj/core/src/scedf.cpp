#include "nearfact/scedf.hpp"

#include <stdexcept>

#include "nearfact/mate.hpp"

namespace nearfact {

std::vector<std::uint64_t> difference_multiset(const GroupSpec& group, const GroupSubset& b,
                                               const GroupSubset& a) {
    std::vector<std::uint64_t> counts(group.order(), 0);
    for (ElementIndex y : b.indices())
        for (ElementIndex x : a.indices()) ++counts[group.add(y, group.neg(x))];
    return counts;
}

bool is_scedf(const DifferenceFamily& family, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const GroupSpec& g = family.group;
    const std::size_t m = family.sets.size();
    if (m == 0) return fail("no sets");
    if (family.ell == 0) return fail("sets must be nonempty");
    if (family.lambda == 0) return fail("lambda must be positive");

    std::vector<bool> used(g.order(), false);
    for (std::size_t j = 0; j < m; ++j) {
        const GroupSubset& s = family.sets[j];
        if (s.size() != family.ell)
            return fail("set " + std::to_string(j + 1) + " has size " + std::to_string(s.size()) +
                        ", expected " + std::to_string(family.ell));
        for (ElementIndex e : s.indices()) {
            if (used[e]) return fail("sets are not pairwise disjoint");
            used[e] = true;
        }
    }

    for (std::size_t j = 0; j < m; ++j) {
        const GroupSubset& from = family.sets[j];
        const GroupSubset& to = family.sets[(j + 1) % m];
        auto counts = difference_multiset(g, to, from);
        if (counts[0] != 0)
            return fail("difference multiset " + std::to_string(j + 1) + " hits the identity");
        for (ElementIndex e = 1; e < g.order(); ++e)
            if (counts[e] != family.lambda)
                return fail("difference multiset " + std::to_string(j + 1) + " covers " +
                            g.element_to_string(e) + " " + std::to_string(counts[e]) + " times, expected " +
                            std::to_string(family.lambda));
    }
    if (reason) reason->clear();
    return true;
}

bool circular_extension_is_blocked(const GroupSpec& group, const GroupSubset& a1, const GroupSubset& a2,
                                   std::uint32_t lambda) {
    GroupSubset neg_a2 = a2.negated();
    if (!verify(group, a1, neg_a2, lambda))
        throw std::invalid_argument("(A1, -A2) is not a near-factorization at this lambda");
    MateResult res = compute_mate_sparse(group, neg_a2, lambda);
    if (!res.found()) throw std::logic_error("mate of a verified near-factorization side went missing");
    return *res.mate == a1;
}

DifferenceFamily quadratic_residue_family(std::uint32_t q) {
    if (q < 5 || !is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("q must be a prime congruent to 1 mod 4");
    GroupSpec g({q});
    std::vector<bool> is_square(q, false);
    for (std::uint32_t x = 1; x < q; ++x) is_square[static_cast<std::uint32_t>((std::uint64_t{x} * x) % q)] = true;
    std::vector<ElementIndex> squares, non_squares;
    for (std::uint32_t e = 1; e < q; ++e) (is_square[e] ? squares : non_squares).push_back(e);

    DifferenceFamily family;
    family.group = g;
    family.sets = {GroupSubset::from_indices(g, squares), GroupSubset::from_indices(g, non_squares)};
    family.ell = (q - 1) / 2;
    family.lambda = (q - 1) / 4;
    return family;
}

}  // namespace nearfact
