#include "nearfact/orbits.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace nearfact {

namespace {

// Lexicographic order on ascending element lists, expressed on bitmasks: the
// smaller subset owns the lowest bit where the two masks differ.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    std::uint32_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::uint32_t> mask_to_elements(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; mask != 0; ++e, mask >>= 1)
        if (mask & 1) out.push_back(e);
    return out;
}

std::uint32_t apply_perm_to_mask(const std::vector<std::uint32_t>& perm, std::uint32_t mask) {
    std::uint32_t image = 0;
    for (std::uint32_t e = 0; mask != 0; ++e, mask >>= 1)
        if (mask & 1) image |= std::uint32_t{1} << perm[e];
    return image;
}

// Orbit representatives (lex-minimal members) of the seed subsets under the
// closure of the given permutations.  All masks must fit in 2^26 states.
std::vector<std::uint32_t> orbit_minima(const std::vector<std::vector<std::uint32_t>>& perms,
                                        std::uint32_t num_elements,
                                        const std::vector<std::uint32_t>& seeds) {
    std::vector<bool> visited(std::size_t{1} << num_elements, false);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t seed : seeds) {
        if (visited[seed]) continue;
        std::uint32_t best = seed;
        std::deque<std::uint32_t> queue{seed};
        visited[seed] = true;
        while (!queue.empty()) {
            std::uint32_t cur = queue.front();
            queue.pop_front();
            if (mask_lex_less(cur, best)) best = cur;
            for (const auto& perm : perms) {
                std::uint32_t img = apply_perm_to_mask(perm, cur);
                if (!visited[img]) {
                    visited[img] = true;
                    queue.push_back(img);
                }
            }
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(), mask_lex_less);
    return reps;
}

// --- GF(2) matrix plumbing.  A k x k matrix is k row masks; the element
// encoding puts coordinate i at bit (k-1-i), matching mixed-radix indexing.

std::uint32_t row_mask_bit(unsigned k, unsigned coord) { return std::uint32_t{1} << (k - 1 - coord); }

bool gf2_invertible(std::vector<std::uint32_t> rows) {
    const unsigned k = static_cast<unsigned>(rows.size());
    for (unsigned col = 0; col < k; ++col) {
        std::uint32_t bit = row_mask_bit(k, col);
        unsigned pivot = col;
        while (pivot < k && !(rows[pivot] & bit)) ++pivot;
        if (pivot == k) return false;
        std::swap(rows[col], rows[pivot]);
        for (unsigned i = 0; i < k; ++i)
            if (i != col && (rows[i] & bit)) rows[i] ^= rows[col];
    }
    return true;
}

std::vector<std::uint32_t> gf2_matrix_to_perm(unsigned k, const std::vector<std::uint32_t>& rows) {
    std::vector<std::uint32_t> perm(std::size_t{1} << k);
    for (std::uint32_t e = 0; e < perm.size(); ++e) {
        std::uint32_t image = 0;
        for (unsigned i = 0; i < k; ++i)
            if (std::popcount(rows[i] & e) & 1u) image |= row_mask_bit(k, i);
        perm[e] = image;
    }
    return perm;
}

}  // namespace

OrbitCatalog gl_orbit_catalog(unsigned k, unsigned i1) {
    if (k < 1 || k > 4) throw std::invalid_argument("gl_orbit_catalog supports 1 <= k <= 4");
    const std::uint32_t num = std::uint32_t{1} << k;
    if (i1 > num) throw std::invalid_argument("subset size exceeds 2^k");

    OrbitCatalog cat;
    cat.context = "GL(" + std::to_string(k) + ",2)";
    cat.part_factors.assign(k, 2);
    cat.subset_size = i1;
    for (std::uint32_t e = 0; e < num; ++e) cat.involution_elements.push_back(e);

    // Full automorphism list: every invertible k x k matrix over GF(2).
    const std::uint64_t total = std::uint64_t{1} << (k * k);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint32_t> rows(k);
        for (unsigned i = 0; i < k; ++i) rows[i] = static_cast<std::uint32_t>((code >> (i * k)) & (num - 1));
        if (gf2_invertible(rows)) cat.automorphisms.push_back(gf2_matrix_to_perm(k, rows));
    }

    // Orbit closure only needs the elementary transvections (add row j to
    // row i); over GF(2) they generate the whole group.
    std::vector<std::vector<std::uint32_t>> generators;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            if (i == j) continue;
            std::vector<std::uint32_t> rows(k);
            for (unsigned t = 0; t < k; ++t) rows[t] = row_mask_bit(k, t);
            rows[i] ^= row_mask_bit(k, j);
            generators.push_back(gf2_matrix_to_perm(k, rows));
        }
    if (generators.empty()) generators.push_back(gf2_matrix_to_perm(k, {row_mask_bit(1, 0)}));

    std::vector<std::uint32_t> seeds;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << num); ++mask)
        if (std::popcount(mask) == static_cast<int>(i1)) seeds.push_back(mask);

    for (std::uint32_t rep : orbit_minima(generators, num, seeds))
        cat.representatives.push_back(mask_to_elements(rep));
    return cat;
}

OrbitCatalog mixed_aut_orbits(MixedAutKind kind) {
    const std::uint32_t m = kind == MixedAutKind::Z2xZ4 ? 4 : 8;
    const std::uint32_t num = 2 * m;

    OrbitCatalog cat;
    cat.context = "Aut(Z2xZ" + std::to_string(m) + ")";
    cat.part_factors = {2, m};
    cat.subset_size = 1;
    cat.involution_elements = {0, m / 2, m, m + m / 2};

    // An automorphism is determined by the images of (1,0) and (0,1); the
    // candidate images just have to keep the map bijective (orders work out
    // because the exponent of the group is m).
    auto encode = [m](std::uint32_t b, std::uint32_t c) { return b * m + c; };
    for (std::uint32_t b1 = 0; b1 < 2; ++b1)
        for (std::uint32_t c1 = 0; c1 < m; ++c1) {
            if ((2 * c1) % m != 0) continue;  // image of (1,0) must be an involution
            for (std::uint32_t b2 = 0; b2 < 2; ++b2)
                for (std::uint32_t c2 = 0; c2 < m; ++c2) {
                    std::vector<std::uint32_t> perm(num);
                    std::vector<bool> hit(num, false);
                    bool bijective = true;
                    for (std::uint32_t b = 0; b < 2 && bijective; ++b)
                        for (std::uint32_t c = 0; c < m && bijective; ++c) {
                            std::uint32_t ib = (b * b1 + c * b2) % 2;
                            std::uint32_t ic = (b * c1 + c * c2) % m;
                            std::uint32_t img = encode(ib, ic);
                            if (hit[img]) bijective = false;
                            hit[img] = true;
                            perm[encode(b, c)] = img;
                        }
                    if (bijective) cat.automorphisms.push_back(std::move(perm));
                }
        }

    std::vector<std::uint32_t> seeds;
    for (std::uint32_t e : cat.involution_elements) seeds.push_back(std::uint32_t{1} << e);
    for (std::uint32_t rep : orbit_minima(cat.automorphisms, num, seeds))
        cat.representatives.push_back(mask_to_elements(rep));
    return cat;
}

std::optional<CatalogBinding> catalog_for(const GroupSpec& group, std::uint32_t i1) {
    std::vector<std::size_t> even_positions;
    for (std::size_t i = 0; i < group.rank(); ++i)
        if (group.factors()[i] % 2 == 0) even_positions.push_back(i);
    if (even_positions.size() < 2) return std::nullopt;

    std::vector<std::uint32_t> evens;
    for (std::size_t pos : even_positions) evens.push_back(group.factors()[pos]);
    std::sort(evens.begin(), evens.end());

    CatalogBinding binding;
    if (evens.back() == 2 && evens.size() <= 4) {
        if (i1 > (std::uint32_t{1} << evens.size())) return std::nullopt;
        binding.catalog = gl_orbit_catalog(static_cast<unsigned>(evens.size()), i1);
        binding.part_positions = even_positions;
    } else if (evens.size() == 2 && evens.front() == 2 && (evens.back() == 4 || evens.back() == 8)) {
        if (i1 != 1) return std::nullopt;
        binding.catalog = mixed_aut_orbits(evens.back() == 4 ? MixedAutKind::Z2xZ4 : MixedAutKind::Z2xZ8);
        // catalog factor order is (2, m); point each slot at the right factor
        std::size_t p0 = even_positions[0], p1 = even_positions[1];
        if (group.factors()[p0] != 2) std::swap(p0, p1);
        binding.part_positions = {p0, p1};
    } else {
        return std::nullopt;
    }

    const auto invs = involutions(group).indices();
    for (std::uint32_t part_elem : binding.catalog.involution_elements) {
        std::vector<std::uint32_t> part_coords(binding.catalog.part_factors.size());
        std::uint32_t rem = part_elem;
        for (std::size_t j = binding.catalog.part_factors.size(); j-- > 0;) {
            part_coords[j] = rem % binding.catalog.part_factors[j];
            rem /= binding.catalog.part_factors[j];
        }
        std::vector<std::uint32_t> coords(group.rank(), 0);
        for (std::size_t j = 0; j < binding.part_positions.size(); ++j)
            coords[binding.part_positions[j]] = part_coords[j];
        ElementIndex idx = group.index_of(coords);
        auto it = std::lower_bound(invs.begin(), invs.end(), idx);
        if (it == invs.end() || *it != idx) throw std::logic_error("catalog involution missing from group");
        binding.universe_to_involution.push_back(static_cast<std::uint32_t>(it - invs.begin()));
    }
    return binding;
}

std::vector<ElementIndex> extend_automorphism(const GroupSpec& group, const CatalogBinding& binding,
                                              std::size_t aut_index) {
    const auto& perm = binding.catalog.automorphisms.at(aut_index);
    const auto& parts = binding.catalog.part_factors;
    std::vector<ElementIndex> out(group.order());
    for (ElementIndex e = 0; e < group.order(); ++e) {
        auto coords = group.coords_of(e);
        std::uint32_t part_elem = 0;
        for (std::size_t j = 0; j < parts.size(); ++j)
            part_elem = part_elem * parts[j] + coords[binding.part_positions[j]];
        std::uint32_t image = perm[part_elem];
        for (std::size_t j = parts.size(); j-- > 0;) {
            coords[binding.part_positions[j]] = image % parts[j];
            image /= parts[j];
        }
        out[e] = group.index_of(coords);
    }
    return out;
}

}  // namespace nearfact
