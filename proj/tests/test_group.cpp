#include <doctest.h>

#include <algorithm>
#include <set>

#include "nearfact/group.hpp"

using namespace nearfact;

namespace {

GroupSubset subset(const GroupSpec& g, const std::vector<ElementIndex>& idx) {
    return GroupSubset::from_indices(g, idx);
}

// independent route to |G/dG|: enumerate the image subgroup dG
std::uint64_t quotient_order_by_enumeration(const GroupSpec& g, unsigned d) {
    std::set<ElementIndex> image;
    for (std::uint64_t e = 0; e < g.order(); ++e) {
        ElementIndex acc = 0;
        for (unsigned k = 0; k < d; ++k) acc = g.add(acc, static_cast<ElementIndex>(e));
        image.insert(acc);
    }
    return g.order() / image.size();
}

}  // namespace

TEST_CASE("group parsing and naming") {
    GroupSpec g = GroupSpec::parse("Z23xZ2xZ2");
    CHECK(g.order() == 92);
    CHECK(g.rank() == 3);
    CHECK(g.factors() == std::vector<std::uint32_t>{23, 2, 2});
    CHECK(g.name() == "Z23xZ2xZ2");
    CHECK(g.canonical_name() == "Z2xZ2xZ23");

    CHECK(GroupSpec::parse("z7").order() == 7);
    CHECK(GroupSpec::parse("Z3XZ9").factors() == std::vector<std::uint32_t>{3, 9});

    CHECK_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Q5"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Z"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Z1"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Z7x"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec(std::vector<std::uint32_t>{65536, 65536}), std::invalid_argument);
}

TEST_CASE("cyclicity from the primary decomposition") {
    CHECK(GroupSpec::parse("Z12").is_cyclic());
    CHECK(GroupSpec::parse("Z3xZ5").is_cyclic());
    CHECK(GroupSpec::parse("Z9xZ16").is_cyclic());
    CHECK_FALSE(GroupSpec::parse("Z2xZ4").is_cyclic());
    CHECK_FALSE(GroupSpec::parse("Z3xZ3").is_cyclic());
    CHECK_FALSE(GroupSpec::parse("Z23xZ2xZ2").is_cyclic());
    CHECK(GroupSpec::parse("Z12").canonical_name() == "Z3xZ4");
}

TEST_CASE("mixed-radix element indexing, last factor fastest") {
    GroupSpec g = GroupSpec::parse("Z23xZ2xZ2");
    CHECK(g.index_of({1, 0, 1}) == 5);
    CHECK(g.index_of({22, 1, 1}) == 91);
    CHECK(g.coords_of(5) == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(g.element_to_string(5) == "(1,0,1)");
    CHECK(GroupSpec::parse("Z7").element_to_string(3) == "3");
    CHECK_THROWS_AS(g.index_of({23, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(g.index_of({1, 1}), std::invalid_argument);
}

TEST_CASE("group arithmetic") {
    GroupSpec g = GroupSpec::parse("Z3xZ9");
    ElementIndex a = g.index_of({2, 7});
    ElementIndex b = g.index_of({2, 5});
    CHECK(g.coords_of(g.add(a, b)) == std::vector<std::uint32_t>{1, 3});
    CHECK(g.coords_of(g.neg(a)) == std::vector<std::uint32_t>{1, 2});
    CHECK(g.add(a, g.neg(a)) == g.zero());
    CHECK(g.neg(g.zero()) == g.zero());

    // commutativity and associativity on a sample
    GroupSpec h = GroupSpec::parse("Z4xZ6");
    for (ElementIndex x = 0; x < h.order(); x += 5)
        for (ElementIndex y = 0; y < h.order(); y += 7) {
            CHECK(h.add(x, y) == h.add(y, x));
            CHECK(h.add(h.add(x, y), 3) == h.add(x, h.add(y, 3)));
        }
}

TEST_CASE("subset basics") {
    GroupSpec g = GroupSpec::parse("Z7");
    GroupSubset s = subset(g, {1, 2});
    CHECK(s.size() == 2);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(3));
    s.insert(3);
    s.insert(3);
    CHECK(s.size() == 3);
    s.erase(2);
    CHECK(s.indices() == std::vector<ElementIndex>{1, 3});
    CHECK(s.negated().indices() == std::vector<ElementIndex>{4, 6});
    CHECK_FALSE(s.is_symmetric());
    CHECK(subset(g, {1, 6}).is_symmetric());
    CHECK(subset(g, {0}).is_symmetric());
    CHECK(subset(g, {1, 6}).to_string() == "{1, 6}");
    CHECK(GroupSubset::full(g).size() == 7);
    CHECK_THROWS_AS(s.insert(7), std::invalid_argument);

    GroupSpec h = GroupSpec::parse("Z3xZ3");
    CHECK(GroupSubset::from_coords(h, {{0, 1}, {1, 0}}).indices() == std::vector<ElementIndex>{1, 3});
    CHECK(subset(h, {1, 3}).to_string() == "{(0,1), (1,0)}");
}

TEST_CASE("involutions and symmetric pairs") {
    struct Row {
        const char* group;
        std::uint64_t t1;
    };
    // t1 = prod gcd(n_i, 2)
    for (Row row : {Row{"Z7", 1}, Row{"Z12", 2}, Row{"Z2xZ4", 4}, Row{"Z2xZ2xZ2", 8},
                    Row{"Z23xZ2xZ2", 4}, Row{"Z3xZ9", 1}, Row{"Z2xZ8", 4}}) {
        GroupSpec g = GroupSpec::parse(row.group);
        GroupSubset inv = involutions(g);
        CHECK_MESSAGE(inv.size() == row.t1, row.group);
        for (ElementIndex e : inv.indices()) CHECK(g.add(e, e) == g.zero());
        auto pairs = symmetric_pairs(g);
        CHECK(pairs.size() == (g.order() - row.t1) / 2);
        for (auto [x, y] : pairs) {
            CHECK(x < y);
            CHECK(g.neg(x) == y);
        }
        // pairs + involutions partition the group
        auto inv_idx = inv.indices();
        std::set<ElementIndex> seen(inv_idx.begin(), inv_idx.end());
        for (auto [x, y] : pairs) {
            seen.insert(x);
            seen.insert(y);
        }
        CHECK(seen.size() == g.order());
    }

    GroupSpec g24 = GroupSpec::parse("Z2xZ4");
    CHECK(involutions(g24).indices() == std::vector<ElementIndex>{0, 2, 4, 6});

    GroupSpec z7 = GroupSpec::parse("Z7");
    auto pairs = symmetric_pairs(z7);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair<ElementIndex, ElementIndex>{1, 6});
    CHECK(pairs[1] == std::pair<ElementIndex, ElementIndex>{2, 5});
    CHECK(pairs[2] == std::pair<ElementIndex, ElementIndex>{3, 4});
}

TEST_CASE("exponent-d quotient order against enumeration") {
    for (const char* name : {"Z7", "Z12", "Z2xZ4", "Z3xZ9", "Z23xZ2xZ2", "Z2xZ2xZ4xZ9", "Z6xZ6"}) {
        GroupSpec g = GroupSpec::parse(name);
        for (unsigned d : {2u, 3u, 4u, 6u})
            CHECK_MESSAGE(quotient_order_exponent_d(g, d) == quotient_order_by_enumeration(g, d),
                          name << " d=" << d);
    }
    CHECK(quotient_order_exponent_d(GroupSpec::parse("Z2xZ2xZ4xZ9"), 6) == 24);
    CHECK_THROWS_AS(quotient_order_exponent_d(GroupSpec::parse("Z7"), 5), std::invalid_argument);
}

TEST_CASE("elementary quotient rank against enumeration") {
    for (const char* name : {"Z7", "Z12", "Z2xZ4", "Z3xZ9", "Z23xZ2xZ2", "Z5xZ5", "Z2xZ2xZ4xZ9"}) {
        GroupSpec g = GroupSpec::parse(name);
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 23ULL}) {
            // |G/pG| = p^m, with pG enumerated directly
            std::set<ElementIndex> image;
            for (std::uint64_t e = 0; e < g.order(); ++e) {
                ElementIndex acc = 0;
                for (std::uint64_t k = 0; k < p; ++k) acc = g.add(acc, static_cast<ElementIndex>(e));
                image.insert(acc);
            }
            std::uint64_t quotient = g.order() / image.size();
            std::uint64_t expected = 1;
            for (unsigned i = 0; i < elementary_p_quotient_rank(g, p); ++i) expected *= p;
            CHECK_MESSAGE(expected == quotient, name << " p=" << p);
        }
    }
}

TEST_CASE("primality helper") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK_FALSE(is_prime(143));
    CHECK(is_prime(2147483647ULL));
}
