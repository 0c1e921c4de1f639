#include "supertube/superalg/supermatrix.hpp"

namespace supertube::superalg {

using exact::QMatrix;
using exact::Rational;

GrassmannElement g_zero(int generators) { return GrassmannElement(generators); }
GrassmannElement g_one(int generators) { return GrassmannElement::scalar(generators, 1); }

namespace {

const char* block_name(bool row_odd, bool col_odd) {
    if (!row_odd && !col_odd) return "M00";
    if (!row_odd) return "M01";
    if (!col_odd) return "M10";
    return "M11";
}

}  // namespace

SuperMatrix::SuperMatrix(SuperDim dim, GMatrix entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_.p < 0 || dim_.q < 0) throw DomainError("super dimension must be nonnegative");
    const auto n = static_cast<std::size_t>(dim_.total());
    if (entries_.rows() != n || entries_.cols() != n)
        throw DomainError("supermatrix entries do not match dimension " + std::to_string(dim_.p) + "|" +
                          std::to_string(dim_.q));
    generators_ = n == 0 ? 0 : entries_(0, 0).generators();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = entries_(i, j);
            if (e.generators() != generators_) throw DomainError("supermatrix entries disagree on generator count");
            const bool row_odd = static_cast<int>(i) >= dim_.p;
            const bool col_odd = static_cast<int>(j) >= dim_.p;
            const bool want_odd = row_odd != col_odd;
            if (want_odd ? !e.is_odd() : !e.is_even()) {
                throw EvennessError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") in block " +
                                    block_name(row_odd, col_odd) + " is not " + (want_odd ? "odd" : "even") +
                                    ": " + to_string(e));
            }
        }
    }
}

SuperMatrix SuperMatrix::identity(SuperDim dim, int generators) {
    const auto n = static_cast<std::size_t>(dim.total());
    return SuperMatrix(dim, exact::identity(n, g_zero(generators), g_one(generators)));
}

SuperMatrix SuperMatrix::zero(SuperDim dim, int generators) {
    const auto n = static_cast<std::size_t>(dim.total());
    return SuperMatrix(dim, GMatrix(n, n, g_zero(generators)));
}

SuperMatrix SuperMatrix::diagonal(const std::vector<Rational>& even, const std::vector<Rational>& odd,
                                  int generators) {
    SuperDim dim{static_cast<int>(even.size()), static_cast<int>(odd.size())};
    const auto n = static_cast<std::size_t>(dim.total());
    GMatrix m(n, n, g_zero(generators));
    for (std::size_t i = 0; i < even.size(); ++i) m(i, i) = GrassmannElement::scalar(generators, even[i]);
    for (std::size_t i = 0; i < odd.size(); ++i)
        m(even.size() + i, even.size() + i) = GrassmannElement::scalar(generators, odd[i]);
    return SuperMatrix(dim, std::move(m));
}

SuperMatrix SuperMatrix::from_rational_blocks(const QMatrix& a00, const QMatrix& a11, int generators) {
    if (!a00.square() || !a11.square()) throw DomainError("diagonal blocks must be square");
    SuperDim dim{static_cast<int>(a00.rows()), static_cast<int>(a11.rows())};
    const auto n = static_cast<std::size_t>(dim.total());
    GMatrix m(n, n, g_zero(generators));
    for (std::size_t i = 0; i < a00.rows(); ++i)
        for (std::size_t j = 0; j < a00.cols(); ++j) m(i, j) = GrassmannElement::scalar(generators, a00(i, j));
    const std::size_t off = a00.rows();
    for (std::size_t i = 0; i < a11.rows(); ++i)
        for (std::size_t j = 0; j < a11.cols(); ++j)
            m(off + i, off + j) = GrassmannElement::scalar(generators, a11(i, j));
    return SuperMatrix(dim, std::move(m));
}

SuperMatrix SuperMatrix::from_blocks(const GMatrix& m00, const GMatrix& m01, const GMatrix& m10, const GMatrix& m11) {
    const std::size_t p = m00.rows();
    const std::size_t q = m11.rows();
    if (m00.cols() != p || m11.cols() != q || m01.rows() != p || m01.cols() != q || m10.rows() != q ||
        m10.cols() != p)
        throw DomainError("inconsistent block shapes");
    int generators = 0;
    if (p > 0)
        generators = m00(0, 0).generators();
    else if (q > 0)
        generators = m11(0, 0).generators();
    GMatrix m(p + q, p + q, g_zero(generators));
    m.set_block(0, 0, m00);
    m.set_block(0, p, m01);
    m.set_block(p, 0, m10);
    m.set_block(p, p, m11);
    return SuperMatrix({static_cast<int>(p), static_cast<int>(q)}, std::move(m));
}

GMatrix SuperMatrix::m00() const {
    return entries_.block(0, 0, static_cast<std::size_t>(dim_.p), static_cast<std::size_t>(dim_.p));
}
GMatrix SuperMatrix::m01() const {
    return entries_.block(0, static_cast<std::size_t>(dim_.p), static_cast<std::size_t>(dim_.p),
                          static_cast<std::size_t>(dim_.q));
}
GMatrix SuperMatrix::m10() const {
    return entries_.block(static_cast<std::size_t>(dim_.p), 0, static_cast<std::size_t>(dim_.q),
                          static_cast<std::size_t>(dim_.p));
}
GMatrix SuperMatrix::m11() const {
    return entries_.block(static_cast<std::size_t>(dim_.p), static_cast<std::size_t>(dim_.p),
                          static_cast<std::size_t>(dim_.q), static_cast<std::size_t>(dim_.q));
}

bool SuperMatrix::scalar_bodied() const {
    for (const auto& e : entries_.data())
        if (!e.is_scalar()) return false;
    return true;
}

QMatrix SuperMatrix::to_rational() const {
    if (!scalar_bodied()) throw DomainError("supermatrix has non-scalar entries");
    QMatrix out = exact::q_zero(entries_.rows(), entries_.cols());
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j) out(i, j) = entries_(i, j).body();
    return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dim_ == b.dim_)) throw DomainError("supermatrix dimension mismatch");
    return SuperMatrix(a.dim_, exact::multiply(a.entries_, b.entries_, g_zero(a.generators_)));
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dim_ == b.dim_)) throw DomainError("supermatrix dimension mismatch");
    return SuperMatrix(a.dim_, exact::add(a.entries_, b.entries_));
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dim_ == b.dim_)) throw DomainError("supermatrix dimension mismatch");
    return SuperMatrix(a.dim_, exact::subtract(a.entries_, b.entries_));
}

SuperMatrix operator*(const Rational& s, const SuperMatrix& a) {
    GMatrix m = a.entries_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    return SuperMatrix(a.dim_, std::move(m));
}

GrassmannElement even_determinant(const GMatrix& m, int generators) {
    return exact::determinant(m, g_zero(generators), g_one(generators));
}

GMatrix even_adjugate(const GMatrix& m, int generators) {
    return exact::adjugate(m, g_zero(generators), g_one(generators));
}

GMatrix even_inverse(const GMatrix& m, int generators) {
    const GrassmannElement det = even_determinant(m, generators);
    if (sgn(det.body()) == 0) throw SingularError("matrix determinant has zero body");
    const GrassmannElement inv = grassmann_inverse(det);
    GMatrix adj = even_adjugate(m, generators);
    for (std::size_t i = 0; i < adj.rows(); ++i)
        for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) * inv;
    return adj;
}

GrassmannElement berezinian(const SuperMatrix& m) {
    const int n = m.generators();
    const GrassmannElement det11 = even_determinant(m.m11(), n);
    if (sgn(det11.body()) == 0) throw SingularError("Berezinian undefined: M11 is body-singular");
    const GrassmannElement inv_det11 = grassmann_inverse(det11);
    GMatrix inv11 = even_adjugate(m.m11(), n);
    for (std::size_t i = 0; i < inv11.rows(); ++i)
        for (std::size_t j = 0; j < inv11.cols(); ++j) inv11(i, j) = inv11(i, j) * inv_det11;
    const GMatrix correction = exact::multiply(exact::multiply(m.m01(), inv11, g_zero(n)), m.m10(), g_zero(n));
    const GMatrix schur = exact::subtract(m.m00(), correction);
    return even_determinant(schur, n) * inv_det11;
}

GrassmannElement supertrace(const SuperMatrix& m) {
    GrassmannElement out = g_zero(m.generators());
    for (int i = 0; i < m.dim().total(); ++i) {
        const auto& e = m(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        if (i < m.dim().p)
            out += e;
        else
            out -= e;
    }
    return out;
}

SuperMatrix inverse(const SuperMatrix& m) {
    const int n = m.generators();
    const GrassmannElement zero = g_zero(n);
    const GMatrix inv11 = even_inverse(m.m11(), n);
    const GMatrix schur = exact::subtract(m.m00(), exact::multiply(exact::multiply(m.m01(), inv11, zero), m.m10(), zero));
    const GMatrix inv_schur = even_inverse(schur, n);
    // [[S^-1, -S^-1 B D^-1], [-D^-1 C S^-1, D^-1 + D^-1 C S^-1 B D^-1]]
    const GMatrix b_dinv = exact::multiply(m.m01(), inv11, zero);
    const GMatrix dinv_c = exact::multiply(inv11, m.m10(), zero);
    const GMatrix top_right = exact::multiply(inv_schur, b_dinv, zero);
    const GMatrix bottom_left = exact::multiply(dinv_c, inv_schur, zero);
    const GMatrix bottom_right = exact::add(inv11, exact::multiply(bottom_left, b_dinv, zero));
    GMatrix neg_tr = top_right;
    for (std::size_t i = 0; i < neg_tr.rows(); ++i)
        for (std::size_t j = 0; j < neg_tr.cols(); ++j) neg_tr(i, j) = -neg_tr(i, j);
    GMatrix neg_bl = bottom_left;
    for (std::size_t i = 0; i < neg_bl.rows(); ++i)
        for (std::size_t j = 0; j < neg_bl.cols(); ++j) neg_bl(i, j) = -neg_bl(i, j);
    return SuperMatrix::from_blocks(inv_schur, neg_tr, neg_bl, bottom_right);
}

}  // namespace supertube::superalg
