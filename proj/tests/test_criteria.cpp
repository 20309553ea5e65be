#include <doctest.h>

#include <stdexcept>
#include <string>

#include "nearfact/criteria.hpp"
#include "nearfact/group.hpp"

using namespace nearfact;

namespace {

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("criterion identifiers") {
    CHECK(std::string(to_string(CriterionId::SmallA)) == "SmallA");
    CHECK(std::string(to_string(CriterionId::ThreePPlusOne)) == "ThreePPlusOne");
    CHECK(std::string(to_string(CriterionId::ExponentQuotient)) == "ExponentQuotient");
    CHECK(std::string(to_string(CriterionId::SpecialForm)) == "SpecialForm");
    CHECK(std::string(to_string(CriterionId::QuotientCongruence)) == "QuotientCongruence");
    CHECK(std::string(to_string(CriterionId::Pecher)) == "Pecher");
}

TEST_CASE("small subset bound") {
    auto v = small_a_criterion(GroupSpec::parse("Z3xZ3"), 2, 4);
    CHECK(v.ruled_out());
    CHECK(v.details == "min(r,s)=2 <= 4 in a noncyclic group");

    // boundary: min(r,s) = 4 still dies, 5 does not
    CHECK(small_a_criterion(GroupSpec::parse("Z5xZ5"), 4, 6).ruled_out());
    CHECK(small_a_criterion(GroupSpec::parse("Z5xZ5"), 6, 4).ruled_out());
    auto big = small_a_criterion(GroupSpec::parse("Z2xZ32"), 7, 9);
    CHECK_FALSE(big.ruled_out());

    // cyclic groups are out of reach
    auto cyc = small_a_criterion(GroupSpec::parse("Z9"), 2, 4);
    CHECK_FALSE(cyc.ruled_out());
    CHECK(has(cyc.details, "cyclic"));
}

TEST_CASE("orders of the form 3p+1") {
    // 16 = 3*5 + 1, so every noncyclic order-16 group loses its (3,5) split
    for (const char* name : {"Z2xZ2xZ2xZ2", "Z2xZ2xZ4", "Z4xZ4", "Z2xZ8"}) {
        auto v = three_p_plus_one_criterion(GroupSpec::parse(name), 3, 5);
        CHECK(v.ruled_out());
        CHECK(has(v.details, "p=5"));
        // always subsumed by the small-subset bound
        CHECK(small_a_criterion(GroupSpec::parse(name), 3, 5).ruled_out());
    }

    auto cyc = three_p_plus_one_criterion(GroupSpec::parse("Z16"), 3, 5);
    CHECK_FALSE(cyc.ruled_out());
    CHECK(has(cyc.details, "cyclic"));

    // 64 - 1 = 63 = 3*21, 21 not prime
    CHECK_FALSE(three_p_plus_one_criterion(GroupSpec::parse("Z8xZ8"), 7, 9).ruled_out());
}

TEST_CASE("exponent quotient bound on the order-144 groups") {
    struct Row {
        const char* name;
        const char* details;
    };
    const Row ruled[] = {
        {"Z2xZ2xZ2xZ2xZ3xZ3", "d=6, |H|=144; min(r,s)=11 < 143"},
        {"Z2xZ2xZ2xZ2xZ9", "d=6, |H|=48; min(r,s)=11 < 47"},
        {"Z2xZ2xZ3xZ3xZ4", "d=6, |H|=72; min(r,s)=11 < 71"},
        {"Z2xZ2xZ4xZ9", "d=6, |H|=24; min(r,s)=11 < 23"},
        {"Z2xZ3xZ3xZ8", "d=6, |H|=36; min(r,s)=11 < 35"},
        {"Z3xZ3xZ4xZ4", "d=6, |H|=36; min(r,s)=11 < 35"},
        {"Z3xZ3xZ16", "d=6, |H|=18; min(r,s)=11 < 17"},
        {"Z4xZ4xZ9", "d=4, |H|=16; min(r,s)=11 < 15"},
    };
    for (const auto& row : ruled) {
        auto v = exponent_quotient_bound(GroupSpec::parse(row.name), 11, 13);
        CHECK_MESSAGE(v.ruled_out(), row.name);
        CHECK_MESSAGE(v.details == row.details, row.name, ": ", v.details);
    }

    // the swap (13,11) reaches the same minimum
    auto swapped = exponent_quotient_bound(GroupSpec::parse("Z3xZ3xZ16"), 13, 11);
    CHECK(swapped.ruled_out());
    CHECK(swapped.details == "d=6, |H|=18; min(r,s)=11 < 17");

    // Z2xZ8xZ9: the best quotient has order 12 and 11 >= 11, so no verdict
    CHECK_FALSE(exponent_quotient_bound(GroupSpec::parse("Z2xZ8xZ9"), 11, 13).ruled_out());
    // cyclic representative of order 144
    CHECK_FALSE(exponent_quotient_bound(GroupSpec::parse("Z9xZ16"), 11, 13).ruled_out());
}

TEST_CASE("special form groups") {
    CHECK(special_form(GroupSpec::parse("Z2xZ2xZ2")).ruled_out());
    CHECK(special_form(GroupSpec::parse("Z3xZ3")).ruled_out());
    CHECK(special_form(GroupSpec::parse("Z2xZ2xZ3xZ3")).ruled_out());
    CHECK(special_form(GroupSpec::parse("Z2xZ4")).ruled_out());
    CHECK(special_form(GroupSpec::parse("Z2xZ4xZ4")).ruled_out());

    CHECK_FALSE(special_form(GroupSpec::parse("Z2xZ3xZ4")).ruled_out());
    CHECK_FALSE(special_form(GroupSpec::parse("Z5xZ5")).ruled_out());
    CHECK_FALSE(special_form(GroupSpec::parse("Z9")).ruled_out());
    CHECK_FALSE(special_form(GroupSpec::parse("Z2xZ8")).ruled_out());
}

TEST_CASE("quotient congruences") {
    // (Z5)^2 at (4,6): 4^4 = 256 = 6 (mod 25), not 1
    auto v5 = quotient_congruence(GroupSpec::parse("Z5xZ5"), 4, 6);
    CHECK(v5.ruled_out());
    CHECK(has(v5.details, "p=5"));

    // (Z7)^2 at (6,8): 6^6 = 8 (mod 49)
    auto v7 = quotient_congruence(GroupSpec::parse("Z7xZ7"), 6, 8);
    CHECK(v7.ruled_out());
    CHECK(has(v7.details, "p=7"));

    // (Z3)^2 quotient of Z2xZ2xZ3xZ3 at (5,7): 5^2 = 7 (mod 9)
    auto v3 = quotient_congruence(GroupSpec::parse("Z2xZ2xZ3xZ3"), 5, 7);
    CHECK(v3.ruled_out());
    CHECK(has(v3.details, "p=3"));

    // p = 2 with rank 3: 5 and 11 are not +-1 (mod 8)
    auto v2 = quotient_congruence(GroupSpec::parse("Z2xZ2xZ2xZ7"), 5, 11);
    CHECK(v2.ruled_out());
    CHECK(has(v2.details, "p=2"));

    // Z23 x (Z2)^2 at (13,7) passes: 13 = 1 and 7 = 3 (mod 4), Fermat mod 23
    CHECK_FALSE(quotient_congruence(GroupSpec::parse("Z23xZ2xZ2"), 13, 7).ruled_out());
    CHECK_FALSE(quotient_congruence(GroupSpec::parse("Z23xZ2xZ2"), 7, 13).ruled_out());

    // cyclic groups always pass: rank 1 means Fermat's little theorem
    CHECK_FALSE(quotient_congruence(GroupSpec::parse("Z25"), 4, 6).ruled_out());
    CHECK_FALSE(quotient_congruence(GroupSpec::parse("Z9"), 2, 4).ruled_out());
}

TEST_CASE("congruence bound for two even components") {
    auto v = pecher_criterion(GroupSpec::parse("Z2xZ8xZ9"), 11, 13);
    CHECK(v.ruled_out());
    CHECK(v.details == "r=11 is congruent to +-3 (mod 8)");

    auto swapped = pecher_criterion(GroupSpec::parse("Z2xZ8xZ9"), 13, 11);
    CHECK(swapped.ruled_out());
    CHECK(swapped.details == "r=13 is congruent to +-3 (mod 8)");

    CHECK(pecher_criterion(GroupSpec::parse("Z4xZ4xZ9"), 11, 13).ruled_out());

    // both 7 and 9 are +-1 (mod 8): nothing to say
    CHECK_FALSE(pecher_criterion(GroupSpec::parse("Z2xZ4xZ8"), 7, 9).ruled_out());
    // 2-part (Z2)^2 has no component of exponent >= 4
    CHECK_FALSE(pecher_criterion(GroupSpec::parse("Z2xZ2xZ9"), 5, 7).ruled_out());
    // single even component
    CHECK_FALSE(pecher_criterion(GroupSpec::parse("Z9xZ16"), 11, 13).ruled_out());
}

TEST_CASE("evaluate_all runs the fixed battery") {
    auto verdicts = evaluate_all(GroupSpec::parse("Z5xZ5"), 4, 6, 1);
    REQUIRE(verdicts.size() == 6);
    CHECK(verdicts[0].id == CriterionId::SmallA);
    CHECK(verdicts[1].id == CriterionId::ThreePPlusOne);
    CHECK(verdicts[2].id == CriterionId::ExponentQuotient);
    CHECK(verdicts[3].id == CriterionId::SpecialForm);
    CHECK(verdicts[4].id == CriterionId::QuotientCongruence);
    CHECK(verdicts[5].id == CriterionId::Pecher);

    // both the small bound and the congruence fire on this input
    CHECK(verdicts[0].ruled_out());
    CHECK(verdicts[4].ruled_out());
    CHECK_FALSE(verdicts[1].ruled_out());
    CHECK_FALSE(verdicts[2].ruled_out());
    CHECK_FALSE(verdicts[3].ruled_out());
    CHECK_FALSE(verdicts[5].ruled_out());
}

TEST_CASE("evaluate_all leaves cyclic groups alone") {
    const struct {
        const char* name;
        std::uint32_t r, s;
    } cases[] = {
        {"Z9", 2, 4},   {"Z25", 2, 12},  {"Z25", 3, 8},   {"Z25", 4, 6},
        {"Z33", 4, 8},  {"Z199", 9, 22}, {"Z199", 11, 18}, {"Z9xZ16", 11, 13},
    };
    for (const auto& c : cases) {
        for (const auto& v : evaluate_all(GroupSpec::parse(c.name), c.r, c.s, 1)) {
            CHECK_MESSAGE(!v.ruled_out(), c.name, " (", c.r, ",", c.s, ") ",
                          to_string(v.id));
        }
    }
}

TEST_CASE("trivial splits and higher index sidestep the battery") {
    // r = 1 never triggers anything, not even the split-free form criterion
    for (const auto& v : evaluate_all(GroupSpec::parse("Z2xZ2xZ3xZ3"), 1, 35, 1)) {
        CHECK_FALSE(v.ruled_out());
    }

    // lambda > 1 comes back inconclusive before any split validation
    auto verdicts = evaluate_all(GroupSpec::parse("Z3xZ3"), 4, 4, 2);
    REQUIRE(verdicts.size() == 6);
    for (const auto& v : verdicts) {
        CHECK_FALSE(v.ruled_out());
        CHECK(v.details == "criteria cover index 1 only");
    }
}

TEST_CASE("split validation") {
    CHECK_THROWS_WITH_AS(small_a_criterion(GroupSpec::parse("Z7"), 2, 2),
                         "r*s must equal n-1", std::invalid_argument);
    CHECK_THROWS_AS(exponent_quotient_bound(GroupSpec::parse("Z3xZ3xZ16"), 10, 13),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_congruence(GroupSpec::parse("Z5xZ5"), 4, 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(pecher_criterion(GroupSpec::parse("Z2xZ8xZ9"), 11, 14),
                    std::invalid_argument);
    CHECK_THROWS_AS(three_p_plus_one_criterion(GroupSpec::parse("Z4xZ4"), 3, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_all(GroupSpec::parse("Z5xZ5"), 4, 7, 1),
                    std::invalid_argument);
}
