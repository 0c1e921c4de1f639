#pragma once

#include "supertube/error.hpp"
#include "supertube/exact/rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace supertube::exact {

// Dense row-major matrix over an arbitrary ring. The ring type needs only
// value semantics, +, -, *; a prototype zero is supplied where the ring has
// no default zero (Grassmann elements carry their generator count).
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<R>& data() const { return data_; }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out;
        out.rows_ = nr;
        out.cols_ = nc;
        out.data_.reserve(nr * nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out.data_.push_back((*this)(r0 + i, c0 + j));
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <class R>
Matrix<R> add(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch in add");
    Matrix<R> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <class R>
Matrix<R> subtract(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch in subtract");
    Matrix<R> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

// Entry order is preserved in each product a(i,k)*b(k,j), so this is also
// correct over non-commutative rings such as the full Grassmann algebra.
template <class R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b, const R& zero) {
    if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in multiply");
    Matrix<R> out(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

template <class R>
Matrix<R> identity(std::size_t n, const R& zero, const R& one) {
    Matrix<R> out(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
}

// Division-free determinant over a commutative ring: dynamic programming over
// the set of columns already assigned to the leading rows, O(n 2^n) ring
// operations. Exact over rings with zero divisors, where elimination would
// need invertible pivots.
template <class R>
R determinant(const Matrix<R>& m, const R& zero, const R& one) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    if (n > 20) throw DomainError("determinant: dimension too large for subset expansion");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::optional<R>> dp(std::size_t{1} << n);
    dp[0] = one;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!dp[mask]) continue;
        const int row = std::popcount(mask);
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if (mask & bit) continue;
            // inversions against already-placed rows that took larger columns
            const bool negative = (std::popcount(mask >> (c + 1)) & 1) != 0;
            R term = *dp[mask] * m(static_cast<std::size_t>(row), c);
            auto& slot = dp[mask | bit];
            if (!slot) slot = zero;
            if (negative)
                *slot -= term;
            else
                *slot += term;
        }
    }
    return dp[full] ? *dp[full] : zero;
}

// adj(m)(i,j) = (-1)^{i+j} det(m without row j and column i).
template <class R>
Matrix<R> adjugate(const Matrix<R>& m, const R& zero, const R& one) {
    if (!m.square()) throw DomainError("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<R> out(n, n, zero);
    if (n == 0) return out;
    if (n == 1) {
        out(0, 0) = one;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<R> minor(n - 1, n - 1, zero);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            R d = determinant(minor, zero, one);
            if ((i + j) % 2 == 0)
                out(i, j) = d;
            else
                out(i, j) = zero - d;
        }
    }
    return out;
}

// Linear algebra over Q.
using QMatrix = Matrix<Rational>;

QMatrix q_zero(std::size_t rows, std::size_t cols);
QMatrix q_identity(std::size_t n);
QMatrix q_multiply(const QMatrix& a, const QMatrix& b);
Rational q_determinant(const QMatrix& m);  // Gaussian elimination
std::size_t q_rank(const QMatrix& m);
QMatrix q_inverse(const QMatrix& m);  // throws SingularError
// Basis of the null space, one column per basis vector.
QMatrix q_nullspace(const QMatrix& m);
// Basis of the column space made of columns of m (pivot columns).
QMatrix q_column_basis(const QMatrix& m);
// Some x with a x = b, or nullopt when inconsistent.
std::optional<QMatrix> q_solve(const QMatrix& a, const QMatrix& b);
bool q_is_zero(const QMatrix& m);

}  // namespace supertube::exact
