#pragma once

#include <cstdint>
#include <optional>

#include "nearfact/group.hpp"
#include "nearfact/rational.hpp"
#include "nearfact/walk_matrix.hpp"

namespace nearfact {

/// A pair (A, B) with A + B covering every non-identity element exactly
/// lambda times and never hitting the identity, so |A||B| = lambda(n-1).
struct NearFactorization {
    GroupSpec group;
    GroupSubset a;
    GroupSubset b;
    std::uint32_t lambda = 1;
};

enum class MateTag {
    Found,       // unique mate recovered and verified
    Singular,    // M(A) not invertible, no mate can exist
    NonBinary,   // solution is not a 0-1 vector, no mate exists
    WrongWeight  // 0-1 solution of the wrong cardinality (diagnostic)
};

enum class MateAlgorithm { Dense, Sparse };

struct MateResult {
    MateTag tag = MateTag::Singular;
    MateAlgorithm algorithm = MateAlgorithm::Sparse;
    std::optional<GroupSubset> mate;  // engaged iff tag == Found

    bool found() const { return tag == MateTag::Found; }
};

const char* to_string(MateTag tag);

/// Multiset check: every non-identity element covered exactly lambda times
/// by {a + b}, the identity never.  O(|A| |B|).
bool verify(const GroupSpec& group, const GroupSubset& a, const GroupSubset& b,
            std::uint32_t lambda);

/// Independent matrix route: M(A) M(B) == lambda (J - I), computed entry by
/// entry.  Agrees with verify() on every input.
bool matrix_product_check(const GroupSpec& group, const GroupSubset& a, const GroupSubset& b,
                          std::uint32_t lambda);

struct DenseMateTrace {
    std::optional<QMatrix> x_inverse;  // engaged unless M(A) is singular
};

/// Inverts X = M(A) over the rationals and reads the candidate mate off
/// Y = (lambda/r) J - lambda X^-1.  A binary Y always verifies; a failed
/// verification after a binary Y is a bug and throws.
MateResult compute_mate_dense(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                              DenseMateTrace* trace = nullptr);

/// Solves the single system X z = lambda (0,1,...,1)^T and reads the mate as
/// B = { -g : z_g = 1 }.  The solve runs modulo a word-sized prime p > lambda*n
/// drawn from a fixed list, retrying on spurious singularity and falling back
/// to exact rational elimination; a candidate is only reported Found after an
/// exact multiset verification, so soundness never depends on the prime.
MateResult compute_mate_sparse(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda);

MateResult compute_mate(const GroupSpec& group, const GroupSubset& a, std::uint32_t lambda,
                        MateAlgorithm algorithm);

}  // namespace nearfact
