#include "nearfact/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace nearfact {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

void check_split(const GroupSpec& group, std::uint32_t r, std::uint32_t s) {
    if (r == 0 || s == 0 || static_cast<std::uint64_t>(r) * s != group.order() - 1)
        throw std::invalid_argument("r*s must equal n-1");
}

bool trivial_split(std::uint32_t r, std::uint32_t s) { return r < 2 || s < 2; }

CriterionVerdict inconclusive(CriterionId id, std::string why) {
    return {id, CriterionOutcome::Inconclusive, std::move(why)};
}

}  // namespace

const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::SmallA: return "SmallA";
        case CriterionId::ThreePPlusOne: return "ThreePPlusOne";
        case CriterionId::ExponentQuotient: return "ExponentQuotient";
        case CriterionId::SpecialForm: return "SpecialForm";
        case CriterionId::QuotientCongruence: return "QuotientCongruence";
        case CriterionId::Pecher: return "Pecher";
    }
    return "?";
}

CriterionVerdict small_a_criterion(const GroupSpec& group, std::uint32_t r, std::uint32_t s) {
    check_split(group, r, s);
    if (trivial_split(r, s)) return inconclusive(CriterionId::SmallA, "trivial split");
    if (group.is_cyclic()) return inconclusive(CriterionId::SmallA, "cyclic group");
    std::uint32_t m = std::min(r, s);
    if (m <= 4)
        return {CriterionId::SmallA, CriterionOutcome::RuledOut,
                "min(r,s)=" + std::to_string(m) + " <= 4 in a noncyclic group"};
    return inconclusive(CriterionId::SmallA, "min(r,s) > 4");
}

CriterionVerdict three_p_plus_one_criterion(const GroupSpec& group, std::uint32_t r,
                                            std::uint32_t s) {
    check_split(group, r, s);
    if (trivial_split(r, s)) return inconclusive(CriterionId::ThreePPlusOne, "trivial split");
    if (group.is_cyclic()) return inconclusive(CriterionId::ThreePPlusOne, "cyclic group");
    std::uint64_t n1 = group.order() - 1;
    if (n1 % 3 == 0 && is_prime(n1 / 3))
        return {CriterionId::ThreePPlusOne, CriterionOutcome::RuledOut,
                "|G| = 3p+1 with p=" + std::to_string(n1 / 3) + " prime"};
    return inconclusive(CriterionId::ThreePPlusOne, "|G| is not 3p+1 for prime p");
}

CriterionVerdict exponent_quotient_bound(const GroupSpec& group, std::uint32_t r,
                                         std::uint32_t s) {
    check_split(group, r, s);
    if (trivial_split(r, s)) return inconclusive(CriterionId::ExponentQuotient, "trivial split");
    unsigned best_d = 0;
    std::uint64_t best_h = 1;
    for (unsigned d : {2u, 3u, 4u, 6u}) {
        std::uint64_t h = quotient_order_exponent_d(group, d);
        if (h > best_h) {
            best_h = h;
            best_d = d;
        }
    }
    std::uint32_t m = std::min(r, s);
    if (best_h >= 2 && m < best_h - 1)
        return {CriterionId::ExponentQuotient, CriterionOutcome::RuledOut,
                "d=" + std::to_string(best_d) + ", |H|=" + std::to_string(best_h) +
                    "; min(r,s)=" + std::to_string(m) + " < " + std::to_string(best_h - 1)};
    return inconclusive(CriterionId::ExponentQuotient,
                        "min(r,s) >= |H|-1 for every d in {2,3,4,6}");
}

CriterionVerdict special_form(const GroupSpec& group) {
    const auto& comps = group.primary_components();
    auto all_in = [&](std::uint64_t x, std::uint64_t y) {
        return std::all_of(comps.begin(), comps.end(),
                           [&](std::uint64_t c) { return c == x || c == y; });
    };
    if (all_in(2, 3))
        return {CriterionId::SpecialForm, CriterionOutcome::RuledOut,
                "primary components within {2,3}"};
    if (all_in(2, 4))
        return {CriterionId::SpecialForm, CriterionOutcome::RuledOut,
                "primary components within {2,4}"};
    return inconclusive(CriterionId::SpecialForm, "shape not covered");
}

CriterionVerdict quotient_congruence(const GroupSpec& group, std::uint32_t r, std::uint32_t s) {
    check_split(group, r, s);
    if (trivial_split(r, s)) return inconclusive(CriterionId::QuotientCongruence, "trivial split");
    std::uint64_t n = group.order();
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (n % p != 0 || !is_prime(p)) continue;
        unsigned m = elementary_p_quotient_rank(group, p);
        std::uint64_t pm = 1;
        for (unsigned i = 0; i < m; ++i) pm *= p;
        if (p == 2) {
            std::uint64_t rr = r % pm, ss = s % pm;
            bool ok = (rr == 1 % pm && ss == (pm - 1) % pm) || (rr == (pm - 1) % pm && ss == 1 % pm);
            if (!ok)
                return {CriterionId::QuotientCongruence, CriterionOutcome::RuledOut,
                        "p=2, m=" + std::to_string(m) + ": need r = -s = +-1 (mod " +
                            std::to_string(pm) + "), got r=" + std::to_string(rr) +
                            ", s=" + std::to_string(ss)};
        } else {
            std::uint64_t re = pow_mod(r, p - 1, pm), se = pow_mod(s, p - 1, pm);
            if (re != 1 || se != 1)
                return {CriterionId::QuotientCongruence, CriterionOutcome::RuledOut,
                        "p=" + std::to_string(p) + ", m=" + std::to_string(m) + ": r^(p-1)=" +
                            std::to_string(re) + ", s^(p-1)=" + std::to_string(se) + " (mod " +
                            std::to_string(pm) + "), need both 1"};
        }
    }
    return inconclusive(CriterionId::QuotientCongruence, "congruences hold for every prime");
}

CriterionVerdict pecher_criterion(const GroupSpec& group, std::uint32_t r, std::uint32_t s) {
    check_split(group, r, s);
    if (trivial_split(r, s)) return inconclusive(CriterionId::Pecher, "trivial split");
    unsigned two_components = 0;
    std::uint64_t largest = 1;
    for (std::uint64_t c : group.primary_components()) {
        if (c % 2 == 0) {
            ++two_components;
            largest = std::max(largest, c);
        }
    }
    if (two_components < 2 || largest < 4)
        return inconclusive(CriterionId::Pecher, "2-part is not Z_{2m} x Z_{4n} x ...");
    auto bad = [](std::uint32_t v) { return v % 8 == 3 || v % 8 == 5; };
    if (bad(r) || bad(s))
        return {CriterionId::Pecher, CriterionOutcome::RuledOut,
                std::string(bad(r) ? "r" : "s") + "=" + std::to_string(bad(r) ? r : s) +
                    " is congruent to +-3 (mod 8)"};
    return inconclusive(CriterionId::Pecher, "neither side is +-3 mod 8");
}

std::vector<CriterionVerdict> evaluate_all(const GroupSpec& group, std::uint32_t r,
                                           std::uint32_t s, std::uint32_t lambda) {
    std::vector<CriterionVerdict> out;
    if (lambda != 1) {
        for (CriterionId id :
             {CriterionId::SmallA, CriterionId::ThreePPlusOne, CriterionId::ExponentQuotient,
              CriterionId::SpecialForm, CriterionId::QuotientCongruence, CriterionId::Pecher})
            out.push_back(inconclusive(id, "criteria cover index 1 only"));
        return out;
    }
    out.push_back(small_a_criterion(group, r, s));
    out.push_back(three_p_plus_one_criterion(group, r, s));
    out.push_back(exponent_quotient_bound(group, r, s));
    CriterionVerdict sf = special_form(group);
    if (trivial_split(r, s)) sf = inconclusive(CriterionId::SpecialForm, "trivial split");
    out.push_back(std::move(sf));
    out.push_back(quotient_congruence(group, r, s));
    out.push_back(pecher_criterion(group, r, s));
    return out;
}

}  // namespace nearfact
