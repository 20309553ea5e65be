#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace nearfact {

using Rational = mpq_class;

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const QMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact inverse via Gauss-Jordan elimination; nullopt when singular.
std::optional<QMatrix> qmatrix_inverse(const QMatrix& m);

/// Exact solution of a square system; nullopt when the system has no unique
/// solution (singular matrix, whether inconsistent or underdetermined).
std::optional<std::vector<Rational>> qmatrix_solve(const QMatrix& a, const std::vector<Rational>& rhs);

}  // namespace nearfact
