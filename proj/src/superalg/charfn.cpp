#include "supertube/superalg/charfn.hpp"

namespace supertube::superalg {

using exact::PowerSeries;
using exact::QMatrix;
using exact::Rational;
using exact::RationalFunction;
using exact::UniPoly;

namespace {

using PolyMatrix = exact::Matrix<GrassmannPoly>;

// 1 + t*m as a matrix of Grassmann polynomials.
PolyMatrix one_plus_t(const GMatrix& m, int n) {
    PolyMatrix out(m.rows(), m.cols(), GrassmannPoly(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = GrassmannPoly::linear(i == j ? g_one(n) : g_zero(n), m(i, j));
    return out;
}

PolyMatrix constant_poly_matrix(const GMatrix& m, int n) {
    PolyMatrix out(m.rows(), m.cols(), GrassmannPoly(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GrassmannPoly::constant(m(i, j));
    return out;
}

UniPoly char_poly_block(const QMatrix& m) {
    exact::Matrix<UniPoly> x(m.rows(), m.cols(), UniPoly());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            x(i, j) = UniPoly{i == j ? Rational(1) : Rational(0), m(i, j)};
    return exact::determinant(x, UniPoly(), UniPoly::constant(1));
}

CharFunction from_value(SuperDim dim, const RationalFunction& value, int raw_num, int raw_den) {
    const int order = dim.p + dim.q + 4;
    CharFunction out{dim, value, value.expand(order), exact::expand_at_infinity(value, order + 1), raw_num, raw_den};
    return out;
}

}  // namespace

GrassmannSeries char_series(const SuperMatrix& a, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    const int n = a.generators();
    GrassmannSeries log_series(n, order);
    SuperMatrix power = a;
    for (int k = 1; k <= order; ++k) {
        if (k > 1) power = power * a;
        GrassmannElement s = supertrace(power) * Rational(1, k);
        log_series[k] = (k % 2 == 1) ? s : -s;
    }
    return series_exp(log_series);
}

RawCharFraction char_function_raw(const SuperMatrix& a) {
    const int n = a.generators();
    const auto p = static_cast<std::size_t>(a.dim().p);
    const GrassmannPoly zero(n);
    const GrassmannPoly one = GrassmannPoly::constant(g_one(n));
    const PolyMatrix d_block = one_plus_t(a.m11(), n);
    const GrassmannPoly d = exact::determinant(d_block, zero, one);
    const PolyMatrix adj = exact::adjugate(d_block, zero, one);
    PolyMatrix correction = exact::multiply(
        exact::multiply(constant_poly_matrix(a.m01(), n), adj, zero), constant_poly_matrix(a.m10(), n), zero);
    const GrassmannPoly t_squared(n, {g_zero(n), g_zero(n), g_one(n)});
    PolyMatrix top = one_plus_t(a.m00(), n);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) top(i, j) = top(i, j) * d - t_squared * correction(i, j);
    return RawCharFraction{a.dim(), exact::determinant(top, zero, one), d.pow(static_cast<unsigned>(p + 1))};
}

GrassmannSeries expand(const RawCharFraction& r, int order) {
    return GrassmannSeries::from_poly(r.num, order) * GrassmannSeries::from_poly(r.den, order).inverse();
}

CharFunction char_function_exact(const SuperMatrix& a) {
    if (!a.scalar_bodied())
        throw DomainError("char_function_exact needs scalar entries; use char_function_raw or char_series");
    const QMatrix m = a.to_rational();
    const auto p = static_cast<std::size_t>(a.dim().p);
    const auto q = static_cast<std::size_t>(a.dim().q);
    const UniPoly num = char_poly_block(m.block(0, 0, p, p));
    const UniPoly den = char_poly_block(m.block(p, p, q, q));
    return from_value(a.dim(), RationalFunction(num, den), num.degree(), den.degree());
}

CharFunction char_function_of(const RationalFunction& r) {
    const SuperDim dim{r.num_degree(), r.den_degree()};
    return from_value(dim, r, dim.p, dim.q);
}

std::vector<GrassmannLaurentTerm> char_dual_series(const SuperMatrix& a, int terms) {
    if (terms < 0) throw DomainError("term count must be nonnegative");
    const GrassmannElement ber = berezinian(a);
    const SuperMatrix inv = inverse(a);
    std::vector<GrassmannLaurentTerm> out;
    if (terms == 0) return out;
    const GrassmannSeries s = char_series(inv, terms - 1);
    const int top = a.dim().p - a.dim().q;
    for (int k = 0; k < terms; ++k) out.push_back({top - k, ber * s[k]});
    return out;
}

BerPlusMinus ber_plus_minus(const CharFunction& r) {
    if (r.raw_num_degree < r.dim.p || r.raw_den_degree < r.dim.q)
        throw DomainError("Ber+/Ber- need invertible diagonal blocks (degenerate leading coefficients)");
    const UniPoly& num = r.value.num();
    const UniPoly& den = r.value.den();
    const int pp = num.degree();
    const int qq = den.degree();
    const Rational prod_lambda = num.leading();
    const Rational prod_mu = den.leading();
    const Rational res = exact::resultant(num.reversed(pp), den.reversed(qq));
    return {res * prod_lambda, res * prod_mu, res};
}

namespace {

// Block b with det(1 + t b) = c, for c(0) = 1.
QMatrix realize_block(const UniPoly& c) {
    const auto d = static_cast<std::size_t>(std::max(c.degree(), 0));
    QMatrix b = exact::q_zero(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) b(i + 1, i) = -1;
    for (std::size_t i = 0; i < d; ++i) b(i, d - 1) = c.coeff(static_cast<int>(d - i));
    return b;
}

}  // namespace

SuperMatrix realize_operator(const RationalFunction& r) {
    if (r.num().coeff(0) != 1) throw DomainError("realize_operator needs R(0) = 1");
    return SuperMatrix::from_rational_blocks(realize_block(r.num()), realize_block(r.den()));
}

}  // namespace supertube::superalg
