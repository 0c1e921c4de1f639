#include "supertube/superalg/subspace.hpp"

namespace supertube::superalg {

using exact::QMatrix;
using exact::Rational;

namespace {

enum class Parity { even, odd };

Parity vector_parity(const Vector& v, SuperDim dim) {
    bool has_even = false;
    bool has_odd = false;
    for (int i = 0; i < dim.total(); ++i) {
        if (sgn(v[static_cast<std::size_t>(i)]) == 0) continue;
        (i < dim.p ? has_even : has_odd) = true;
    }
    if (!has_even && !has_odd) throw DomainError("subspace basis contains the zero vector");
    if (has_even && has_odd) throw DomainError("subspace basis vector is not homogeneous");
    return has_even ? Parity::even : Parity::odd;
}

QMatrix columns(const std::vector<Vector>& vs, std::size_t n) {
    QMatrix m = exact::q_zero(n, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
    return m;
}

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
}

// Extends `part` with standard vectors e_lo..e_{hi-1} that raise the rank.
std::vector<Vector> complete(const std::vector<Vector>& part, std::size_t n, std::size_t lo, std::size_t hi) {
    std::vector<Vector> all = part;
    std::vector<Vector> added;
    for (std::size_t i = lo; i < hi; ++i) {
        all.push_back(unit(n, i));
        if (exact::q_rank(columns(all, n)) == all.size())
            added.push_back(all.back());
        else
            all.pop_back();
    }
    return added;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
    QMatrix out = exact::q_zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

}  // namespace

QuotientCheck quotient_char_check(const SuperMatrix& a, const std::vector<Vector>& basis) {
    const QMatrix m = a.to_rational();
    const SuperDim dim = a.dim();
    const auto n = static_cast<std::size_t>(dim.total());
    const auto p = static_cast<std::size_t>(dim.p);
    std::vector<Vector> even;
    std::vector<Vector> odd;
    for (const auto& v : basis) {
        if (v.size() != n) throw DomainError("subspace basis vector has the wrong length");
        (vector_parity(v, dim) == Parity::even ? even : odd).push_back(v);
    }
    const QMatrix span = columns(basis, n);
    if (exact::q_rank(span) != basis.size()) throw DomainError("subspace basis is linearly dependent");
    if (!exact::q_solve(span, exact::q_multiply(m, span))) throw DomainError("subspace is not invariant under A");

    const std::vector<Vector> even_rest = complete(even, n, 0, p);
    const std::vector<Vector> odd_rest = complete(odd, n, p, n);
    std::vector<Vector> frame = even;
    frame.insert(frame.end(), even_rest.begin(), even_rest.end());
    frame.insert(frame.end(), odd.begin(), odd.end());
    frame.insert(frame.end(), odd_rest.begin(), odd_rest.end());
    const QMatrix change = columns(frame, n);
    const QMatrix b = exact::q_multiply(exact::q_inverse(change), exact::q_multiply(m, change));

    const std::size_t r = even.size();
    const std::size_t s = odd.size();
    const std::size_t q = n - p;
    const QMatrix quot_even = b.block(r, r, p - r, p - r);
    const QMatrix quot_odd = b.block(p + s, p + s, q - s, q - s);
    const QMatrix sub_even = b.block(0, 0, r, r);
    const QMatrix sub_odd = b.block(p, p, s, s);

    QuotientCheck out{char_function_exact(SuperMatrix::from_rational_blocks(quot_even, quot_odd)),
                      char_function_exact(SuperMatrix::from_rational_blocks(
                          direct_sum(m.block(0, 0, p, p), sub_odd), direct_sum(m.block(p, p, q, q), sub_even))),
                      false,
                      {static_cast<int>(p - r), static_cast<int>(q - s)},
                      {static_cast<int>(p + s), static_cast<int>(q + r)}};
    out.equal = out.lhs.value == out.rhs.value;
    return out;
}

OddOperator::OddOperator(SuperDim dim, QMatrix matrix) : dim_(dim), matrix_(std::move(matrix)) {
    const auto n = static_cast<std::size_t>(dim_.total());
    const auto p = static_cast<std::size_t>(dim_.p);
    if (matrix_.rows() != n || matrix_.cols() != n) throw DomainError("odd operator does not match its dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i < p) == (j < p) && sgn(matrix_(i, j)) != 0)
                throw EvennessError("odd operator has a nonzero entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") in a diagonal block");
}

namespace {

std::vector<Vector> column_vectors(const QMatrix& m) {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vector v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

// Vectors of `sub` (columns restricted to coordinates lo..hi) embedded back
// into the full space.
std::vector<Vector> embed(const QMatrix& sub, std::size_t n, std::size_t lo) {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < sub.cols(); ++j) {
        Vector v(n, Rational(0));
        for (std::size_t i = 0; i < sub.rows(); ++i) v[lo + i] = sub(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

CohomologyCheck complex_cohomology_char(const OddOperator& d, const SuperMatrix& a) {
    if (!(d.dim() == a.dim())) throw DomainError("differential and operator dimensions differ");
    const QMatrix m = a.to_rational();
    const QMatrix& dm = d.matrix();
    const auto n = static_cast<std::size_t>(a.dim().total());
    const auto p = static_cast<std::size_t>(a.dim().p);
    if (!exact::q_is_zero(exact::q_multiply(dm, dm))) throw IdentityViolation("d^2 = 0 fails");
    if (!(exact::q_multiply(m, dm) == exact::q_multiply(dm, m))) throw IdentityViolation("Ad = dA fails");

    // d maps even vectors to odd ones and back, so kernel and image split by parity.
    const QMatrix d_even = dm.block(0, 0, n, p);
    const QMatrix d_odd = dm.block(0, p, n, n - p);
    std::vector<Vector> cycles = embed(exact::q_nullspace(d_even), n, 0);
    const std::size_t z_even = cycles.size();
    const auto odd_cycles = embed(exact::q_nullspace(d_odd), n, p);
    cycles.insert(cycles.end(), odd_cycles.begin(), odd_cycles.end());
    const std::size_t z = cycles.size();

    std::vector<Vector> boundaries = column_vectors(exact::q_column_basis(d_odd));
    const auto odd_boundaries = column_vectors(exact::q_column_basis(d_even));
    boundaries.insert(boundaries.end(), odd_boundaries.begin(), odd_boundaries.end());

    const QMatrix zmat = columns(cycles, n);
    const auto restricted = exact::q_solve(zmat, exact::q_multiply(m, zmat));
    if (!restricted) throw IdentityViolation("Ad = dA fails");
    const SuperMatrix a_on_z = SuperMatrix::from_rational_blocks(
        restricted->block(0, 0, z_even, z_even), restricted->block(z_even, z_even, z - z_even, z - z_even));

    std::vector<Vector> boundary_coords;
    if (!boundaries.empty()) {
        const auto coords = exact::q_solve(zmat, columns(boundaries, n));
        if (!coords) throw IdentityViolation("d^2 = 0 fails");
        boundary_coords = column_vectors(*coords);
    }
    QuotientCheck quotient = quotient_char_check(a_on_z, boundary_coords);
    CohomologyCheck out{quotient.lhs, char_function_exact(a), false, quotient.quotient_dim};
    out.equal = out.on_h.value == out.on_e.value;
    return out;
}

}  // namespace supertube::superalg
