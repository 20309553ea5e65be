#include "nearfact/mate.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nearfact {

namespace {

// Word-sized primes used for the modular solve, tried in order.  All exceed
// lambda*n for desk-scale inputs; anything larger goes straight to the exact
// rational fallback.
constexpr std::array<std::uint64_t, 4> kSolverPrimes = {2147483647ULL, 2147483629ULL,
                                                        2147483587ULL, 2147483579ULL};

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

enum class ModStatus { Unique, NotUnique };

// Gaussian elimination of the augmented system [X | rhs] over GF(p) where
// rhs = lambda * (0,1,...,1)^T.  NotUnique covers both inconsistent and
// underdetermined outcomes; callers retry with another prime.
ModStatus modular_solve(const WalkMatrix& x, std::uint64_t lambda, std::uint64_t p,
                        std::vector<std::uint64_t>& z) {
    std::size_t n = x.dimension();
    std::size_t w = n + 1;
    std::vector<std::uint64_t> a(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (ElementIndex j : x.row(i)) a[i * w + j] = 1;
        a[i * w + n] = i == 0 ? 0 : lambda % p;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * w + col] == 0) ++piv;
        if (piv == n) return ModStatus::NotUnique;
        if (piv != col)
            for (std::size_t j = col; j < w; ++j) std::swap(a[col * w + j], a[piv * w + j]);
        std::uint64_t inv = pow_mod(a[col * w + col], p - 2, p);
        for (std::size_t j = col; j < w; ++j) a[col * w + j] = a[col * w + j] * inv % p;
        for (std::size_t r = col + 1; r < n; ++r) {
            std::uint64_t f = a[r * w + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < w; ++j)
                a[r * w + j] = (a[r * w + j] + (p - f) * a[col * w + j]) % p;
        }
    }
    z.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t acc = a[i * w + n];
        for (std::size_t j = i + 1; j < n; ++j)
            acc = (acc + (p - a[i * w + j] % p * z[j] % p)) % p;
        z[i] = acc;
    }
    return ModStatus::Unique;
}

std::uint64_t mate_size(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda) {
    if (a.group() != group) throw std::invalid_argument("subset belongs to a different group");
    if (a.empty()) throw std::invalid_argument("A must be nonempty");
    if (lambda == 0) throw std::invalid_argument("lambda must be positive");
    std::uint64_t target = static_cast<std::uint64_t>(lambda) * (group.order() - 1);
    if (target % a.size() != 0)
        throw std::invalid_argument("|A| must divide lambda*(n-1)");
    return target / a.size();
}

// z is known to be a 0-1 vector; reads B = { -g : z_g = 1 } and verifies it.
MateResult classify_binary(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                           std::uint64_t s, const std::vector<ElementIndex>& ones,
                           MateAlgorithm algorithm) {
    if (ones.size() != s) return {MateTag::WrongWeight, algorithm, std::nullopt};
    GroupSubset b(group);
    for (ElementIndex g : ones) b.insert(group.neg(g));
    if (!verify(group, a, b, lambda)) return {MateTag::NonBinary, algorithm, std::nullopt};
    return {MateTag::Found, algorithm, std::move(b)};
}

}  // namespace

const char* to_string(MateTag tag) {
    switch (tag) {
        case MateTag::Found: return "found";
        case MateTag::Singular: return "singular";
        case MateTag::NonBinary: return "non-binary";
        case MateTag::WrongWeight: return "wrong-weight";
    }
    return "?";
}

bool verify(const GroupSpec& group, const GroupSubset& a, const GroupSubset& b,
            std::uint32_t lambda) {
    if (a.group() != group || b.group() != group)
        throw std::invalid_argument("subset belongs to a different group");
    std::size_t n = static_cast<std::size_t>(group.order());
    std::vector<std::uint64_t> count(n, 0);
    std::vector<ElementIndex> bi = b.indices();
    for (ElementIndex x : a.indices())
        for (ElementIndex y : bi) ++count[group.add(x, y)];
    if (count[0] != 0) return false;
    for (std::size_t g = 1; g < n; ++g)
        if (count[g] != lambda) return false;
    return true;
}

bool matrix_product_check(const GroupSpec& group, const GroupSubset& a, const GroupSubset& b,
                          std::uint32_t lambda) {
    WalkMatrix ma(group, a);
    WalkMatrix mb(group, b);
    std::size_t n = ma.dimension();
    std::vector<std::uint64_t> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        for (ElementIndex k : ma.row(i))
            for (ElementIndex j : mb.row(k)) ++row[j];
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != (i == j ? 0 : lambda)) return false;
    }
    return true;
}

MateResult compute_mate_dense(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                              DenseMateTrace* trace) {
    std::uint64_t s = mate_size(group, a, lambda);
    WalkMatrix x(group, a);
    std::optional<QMatrix> inv = qmatrix_inverse(x.to_rational());
    if (trace) trace->x_inverse = inv;
    if (!inv) return {MateTag::Singular, MateAlgorithm::Dense, std::nullopt};

    std::size_t n = x.dimension();
    Rational lam_over_r(lambda, static_cast<unsigned long>(a.size()));
    lam_over_r.canonicalize();  // the two-argument constructor does not reduce
    Rational lam(lambda);
    GroupSubset b(group);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational y = lam_over_r - lam * inv->at(i, j);
            if (y != 0 && y != 1) return {MateTag::NonBinary, MateAlgorithm::Dense, std::nullopt};
            if (i == 0 && y == 1) b.insert(static_cast<ElementIndex>(j));
        }
    }
    if (b.size() != s || !verify(group, a, b, lambda))
        throw std::logic_error("binary Y failed verification; this cannot happen");
    return {MateTag::Found, MateAlgorithm::Dense, std::move(b)};
}

MateResult compute_mate_sparse(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda) {
    std::uint64_t s = mate_size(group, a, lambda);
    WalkMatrix x(group, a);
    std::size_t n = x.dimension();
    std::uint64_t bound = static_cast<std::uint64_t>(lambda) * group.order();

    std::vector<std::uint64_t> z;
    for (std::uint64_t p : kSolverPrimes) {
        if (p <= bound) continue;
        if (modular_solve(x, lambda, p, z) != ModStatus::Unique) continue;
        std::vector<ElementIndex> ones;
        for (std::size_t g = 0; g < n; ++g) {
            if (z[g] == 1)
                ones.push_back(static_cast<ElementIndex>(g));
            else if (z[g] != 0)
                return {MateTag::NonBinary, MateAlgorithm::Sparse, std::nullopt};
        }
        return classify_binary(group, a, lambda, s, ones, MateAlgorithm::Sparse);
    }

    // Every prime saw a singular system (or the primes were too small):
    // settle it exactly.
    std::vector<Rational> rhs(n, Rational(lambda));
    rhs[0] = 0;
    std::optional<std::vector<Rational>> ze = qmatrix_solve(x.to_rational(), rhs);
    if (!ze) return {MateTag::Singular, MateAlgorithm::Sparse, std::nullopt};
    std::vector<ElementIndex> ones;
    for (std::size_t g = 0; g < n; ++g) {
        if ((*ze)[g] == 1)
            ones.push_back(static_cast<ElementIndex>(g));
        else if ((*ze)[g] != 0)
            return {MateTag::NonBinary, MateAlgorithm::Sparse, std::nullopt};
    }
    MateResult res = classify_binary(group, a, lambda, s, ones, MateAlgorithm::Sparse);
    if (res.tag == MateTag::NonBinary)
        throw std::logic_error("exact binary solution failed verification; this cannot happen");
    return res;
}

MateResult compute_mate(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                        MateAlgorithm algorithm) {
    return algorithm == MateAlgorithm::Dense ? compute_mate_dense(group, a, lambda)
                                             : compute_mate_sparse(group, a, lambda);
}

}  // namespace nearfact
