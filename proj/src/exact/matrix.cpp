#include "supertube/exact/matrix.hpp"

#include <utility>

namespace supertube::exact {

QMatrix q_zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols, Rational(0)); }

QMatrix q_identity(std::size_t n) { return identity(n, Rational(0), Rational(1)); }

QMatrix q_multiply(const QMatrix& a, const QMatrix& b) { return multiply(a, b, Rational(0)); }

bool q_is_zero(const QMatrix& m) {
    for (const auto& x : m.data())
        if (sgn(x) != 0) return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && sgn(m(pr, col)) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Rational q_determinant(const QMatrix& m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    QMatrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && sgn(a(pr, col)) == 0) ++pr;
        if (pr == n) return Rational(0);
        if (pr != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pr, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::size_t q_rank(const QMatrix& m) {
    QMatrix a = m;
    return rref(a).size();
}

QMatrix q_inverse(const QMatrix& m) {
    if (!m.square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug = q_zero(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, q_identity(n));
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw SingularError("matrix is singular");
    return aug.block(0, n, n, n);
}

QMatrix q_nullspace(const QMatrix& m) {
    QMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis = q_zero(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -a(r, f);
    }
    return basis;
}

QMatrix q_column_basis(const QMatrix& m) {
    QMatrix a = m;
    auto pivots = rref(a);
    QMatrix out = q_zero(m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, pivots[k]);
    return out;
}

std::optional<QMatrix> q_solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw DomainError("q_solve: shape mismatch");
    const std::size_t n = a.cols();
    const std::size_t k = b.cols();
    QMatrix aug = q_zero(a.rows(), n + k);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    auto pivots = rref(aug);
    for (auto c : pivots)
        if (c >= n) return std::nullopt;
    QMatrix x = q_zero(n, k);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = aug(r, n + j);
    return x;
}

}  // namespace supertube::exact
