#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nearfact/group.hpp"

namespace nearfact {

/// Orbit data for subsets of the involutions of a 2-part group P under a
/// group of automorphisms of P.  Part elements are encoded in the mixed-radix
/// order of part_factors (last factor fastest), matching group indexing.
struct OrbitCatalog {
    std::string context;                                      // e.g. "GL(3,2)" or "Aut(Z2xZ4)"
    std::vector<std::uint32_t> part_factors;                  // (2,...,2), (2,4) or (2,8)
    std::uint32_t subset_size = 0;                            // i1
    std::vector<std::vector<std::uint32_t>> automorphisms;    // permutations of part elements
    std::vector<std::uint32_t> involution_elements;           // 2x = 0 within the part, ascending
    std::vector<std::vector<std::uint32_t>> representatives;  // lex-minimal subset per orbit
};

/// Orbits of i1-subsets of (Z_2)^k under GL(k,2), 1 <= k <= 4.
/// Representatives are the lexicographically minimal subsets of their orbits,
/// listed in ascending order.
OrbitCatalog gl_orbit_catalog(unsigned k, unsigned i1);

enum class MixedAutKind { Z2xZ4, Z2xZ8 };

/// Single-involution orbits under the full automorphism group of Z_2 x Z_4
/// (8 automorphisms) or Z_2 x Z_8 (16).  The identity and (0, m/2) are fixed;
/// (1, 0) and (1, m/2) form one orbit, giving three representatives.
OrbitCatalog mixed_aut_orbits(MixedAutKind kind);

/// A catalog attached to a concrete group: position u of the catalog's
/// involution universe corresponds to entry universe_to_involution[u] of the
/// ascending involution list of the group.
struct CatalogBinding {
    OrbitCatalog catalog;
    std::vector<std::size_t> part_positions;  // factor index of each catalog factor
    std::vector<std::uint32_t> universe_to_involution;
};

/// Picks the applicable catalog for choosing i1 involutions in G, if any:
/// an elementary abelian 2-part (Z_2)^k with 2 <= k <= 4 uses GL(k,2) for
/// every i1; a {2,4} or {2,8} 2-part uses the mixed catalog for i1 = 1.
/// Anything else (including factors like Z_6) gets no reduction.
std::optional<CatalogBinding> catalog_for(const GroupSpec& group, std::uint32_t i1);

/// Extends a part automorphism (index into catalog.automorphisms) to a
/// permutation of all elements of the bound group: the odd coordinates are
/// fixed, the even coordinates transform through the part action.
std::vector<ElementIndex> extend_automorphism(const GroupSpec& group, const CatalogBinding& binding,
                                              std::size_t aut_index);

}  // namespace nearfact
