#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nearfact {

/// Position of an element in the mixed-radix enumeration of a group.
using ElementIndex = std::uint32_t;

/// Element of a finite abelian group, written additively as one coordinate
/// per factor of the defining GroupSpec.
struct GroupElement {
    std::vector<std::uint32_t> coords;

    bool operator==(const GroupElement& other) const { return coords == other.coords; }
};

/// A finite abelian group given as a direct product Z_{n1} x ... x Z_{nk}.
///
/// The factor list is kept in the order it was entered.  Elements are indexed
/// 0..n-1 in mixed-radix order with the last factor varying fastest, so index
/// 0 is the identity and the index order coincides with lexicographic order
/// on coordinate tuples.
class GroupSpec {
public:
    /// Trivial group of order 1, so structs holding a GroupSpec can be
    /// default-constructed before the real group is filled in.
    GroupSpec() = default;

    explicit GroupSpec(std::vector<std::uint32_t> factors);

    /// Parses literals such as "Z7", "Z3xZ3" or "z23xz2xz2" (case-insensitive).
    /// Throws std::invalid_argument naming the offending token.
    static GroupSpec parse(std::string_view text);

    const std::vector<std::uint32_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }

    /// Prime-power components of the primary decomposition, ascending.
    const std::vector<std::uint64_t>& primary_components() const { return primary_; }

    /// A group is cyclic iff no prime occurs in two primary components.
    bool is_cyclic() const { return cyclic_; }

    /// Name built from the factor list as entered, e.g. "Z23xZ2xZ2".
    std::string name() const;

    /// Name built from the primary components in ascending order.
    std::string canonical_name() const;

    ElementIndex add(ElementIndex a, ElementIndex b) const;
    ElementIndex neg(ElementIndex a) const;
    ElementIndex zero() const { return 0; }

    std::vector<std::uint32_t> coords_of(ElementIndex idx) const;
    ElementIndex index_of(const std::vector<std::uint32_t>& coords) const;

    /// "3" for rank-1 groups, "(1,0,1)" otherwise.
    std::string element_to_string(ElementIndex idx) const;

    bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }
    bool operator!=(const GroupSpec& other) const { return !(*this == other); }

private:
    std::vector<std::uint32_t> factors_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 1;
    std::vector<std::uint64_t> primary_;
    bool cyclic_ = true;
};

GroupElement add(const GroupElement& g, const GroupElement& h, const GroupSpec& group);
GroupElement neg(const GroupElement& g, const GroupSpec& group);

/// Subset of a group held as a bitset over the canonical element indexing.
class GroupSubset {
public:
    explicit GroupSubset(GroupSpec group);
    static GroupSubset from_indices(GroupSpec group, const std::vector<ElementIndex>& idx);
    static GroupSubset from_coords(GroupSpec group,
                                   const std::vector<std::vector<std::uint32_t>>& elems);
    static GroupSubset full(GroupSpec group);

    const GroupSpec& group() const { return group_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(ElementIndex idx) const;
    void insert(ElementIndex idx);
    void erase(ElementIndex idx);

    /// Element indices in ascending order.
    std::vector<ElementIndex> indices() const;
    std::vector<std::vector<std::uint32_t>> coords() const;

    GroupSubset negated() const;
    bool is_symmetric() const;

    std::string to_string() const;

    bool operator==(const GroupSubset& other) const;
    bool operator<(const GroupSubset& other) const;

private:
    GroupSpec group_;
    std::vector<std::uint64_t> bits_;
    std::size_t size_ = 0;
};

/// All x with x + x = 0, identity included, ascending by index.
/// Their number is prod_i gcd(n_i, 2).
GroupSubset involutions(const GroupSpec& group);

/// Unordered pairs {x, -x} with x != -x, one entry per pair, smaller index
/// first, sorted by that smaller index.  There are (n - t1)/2 of them where
/// t1 is the involution count.
std::vector<std::pair<ElementIndex, ElementIndex>> symmetric_pairs(const GroupSpec& group);

/// Order of G / dG for d in {2, 3, 4, 6}, i.e. prod_i gcd(n_i, d).
/// The quotient has exponent dividing d.  Throws on other d.
std::uint64_t quotient_order_exponent_d(const GroupSpec& group, unsigned d);

/// Largest m such that (Z_p)^m is a quotient of G: the number of factors
/// divisible by the prime p.
unsigned elementary_p_quotient_rank(const GroupSpec& group, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace nearfact
