#include "nearfact/rational.hpp"

#include <stdexcept>
#include <utility>

namespace nearfact {

namespace {

// Forward elimination to upper triangular form with row pivoting.
// Returns false if some pivot column has no nonzero entry.
bool eliminate(QMatrix& m) {
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(col, j), m.at(piv, j));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / m.at(col, col);
            m.at(r, col) = 0;
            for (std::size_t j = col + 1; j < m.cols(); ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return true;
}

}  // namespace

std::optional<QMatrix> qmatrix_inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    if (!eliminate(aug)) return std::nullopt;
    // back substitution over the augmented half
    for (std::size_t col = n; col-- > 0;) {
        Rational inv = 1 / aug.at(col, col);
        for (std::size_t j = n; j < 2 * n; ++j) aug.at(col, j) *= inv;
        for (std::size_t r = 0; r < col; ++r) {
            if (aug.at(r, col) == 0) continue;
            Rational f = aug.at(r, col);
            for (std::size_t j = n; j < 2 * n; ++j) aug.at(r, j) -= f * aug.at(col, j);
            aug.at(r, col) = 0;
        }
    }
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::optional<std::vector<Rational>> qmatrix_solve(const QMatrix& a, const std::vector<Rational>& rhs) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong length");
    std::size_t n = a.rows();
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    if (!eliminate(aug)) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = aug.at(i, n);
        for (std::size_t j = i + 1; j < n; ++j) acc -= aug.at(i, j) * x[j];
        x[i] = acc / aug.at(i, i);
    }
    return x;
}

}  // namespace nearfact
