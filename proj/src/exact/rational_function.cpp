#include "supertube/exact/rational_function.hpp"

#include "supertube/error.hpp"
#include "supertube/exact/matrix.hpp"

#include <algorithm>

namespace supertube::exact {

RationalFunction::RationalFunction(UniPoly num) : RationalFunction(std::move(num), UniPoly::constant(1)) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (!num.is_zero()) {
        UniPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    } else {
        den = UniPoly::constant(1);
    }
    const Rational d0 = den.coeff(0);
    if (sgn(d0) == 0) throw DomainError("reduced denominator vanishes at t = 0");
    const Rational scale = 1 / d0;
    num_ = num * scale;
    den_ = den * scale;
}

Rational RationalFunction::operator()(const Rational& t) const {
    const Rational d = den_(t);
    if (sgn(d) == 0) throw SingularError("rational function evaluated at a pole");
    return num_(t) / d;
}

PowerSeries RationalFunction::expand(int order) const {
    return PowerSeries::from_poly(num_, order) / PowerSeries::from_poly(den_, order);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& r) {
    const std::string n = to_string(r.num());
    if (r.den_degree() == 0) return n;
    const bool wrap = r.num().degree() > 0;
    return (wrap ? "(" + n + ")" : n) + "/(" + to_string(r.den()) + ")";
}

std::vector<LaurentTerm> expand_at_infinity(const RationalFunction& r, int terms) {
    if (terms <= 0) return {};
    if (r.num().is_zero()) {
        std::vector<LaurentTerm> out;
        for (int j = 0; j < terms; ++j) out.push_back({-j, Rational(0)});
        return out;
    }
    // r(1/s) = s^{q-p} * rev(num)(s) / rev(den)(s)
    const int p = r.num_degree();
    const int q = r.den_degree();
    const int order = terms - 1;
    PowerSeries ratio = PowerSeries::from_poly(r.num().reversed(p), order) /
                        PowerSeries::from_poly(r.den().reversed(q), order);
    std::vector<LaurentTerm> out;
    for (int j = 0; j < terms; ++j) out.push_back({p - q - j, ratio[j]});
    return out;
}

namespace {

// Solves for the denominator b_1..b_q (b_0 = 1) such that the product s*D has
// vanishing coefficients at orders pmax+1 .. pmax+qmax.
std::optional<UniPoly> pade_denominator(const PowerSeries& s, int pmax, int qmax, int q) {
    if (qmax == 0) return UniPoly::constant(1);
    const auto rows = static_cast<std::size_t>(qmax);
    const auto cols = static_cast<std::size_t>(q);
    auto coeff = [&](int k) { return k < 0 ? Rational(0) : s[k]; };
    QMatrix a = q_zero(rows, cols);
    QMatrix rhs = q_zero(rows, 1);
    for (int e = 0; e < qmax; ++e) {
        const int k = pmax + 1 + e;
        for (int j = 1; j <= q; ++j) a(static_cast<std::size_t>(e), static_cast<std::size_t>(j - 1)) = coeff(k - j);
        rhs(static_cast<std::size_t>(e), 0) = -coeff(k);
    }
    if (q == 0) {
        if (!q_is_zero(rhs)) return std::nullopt;
        return UniPoly::constant(1);
    }
    auto x = q_solve(a, rhs);
    if (!x) return std::nullopt;
    std::vector<Rational> b{Rational(1)};
    for (std::size_t j = 0; j < cols; ++j) b.push_back((*x)(j, 0));
    return UniPoly(std::move(b));
}

}  // namespace

RationalFunction pade_reconstruct(const PowerSeries& s, int pmax, int qmax) {
    if (pmax < 0 || qmax < 0) throw DomainError("pade_reconstruct: negative degree bound");
    if (s[0] != 1) throw DomainError("pade_reconstruct: series must have constant term 1");
    if (s.order() < pmax + qmax) throw DomainError("pade_reconstruct: series order below pmax + qmax");
    const int fit = pmax + qmax;
    for (int q = 0; q <= qmax; ++q) {
        auto den = pade_denominator(s, pmax, qmax, q);
        if (!den) continue;
        PowerSeries prod = s.truncated(fit) * PowerSeries::from_poly(*den, fit);
        std::vector<Rational> num(static_cast<std::size_t>(pmax) + 1, Rational(0));
        for (int k = 0; k <= pmax; ++k) num[static_cast<std::size_t>(k)] = prod[k];
        RationalFunction r(UniPoly(std::move(num)), *den);
        if (r.expand(fit) == s.truncated(fit)) return r;
    }
    throw NotRationalError("not rational within bounds (" + std::to_string(pmax) + ", " + std::to_string(qmax) + ")");
}

bool linear_recurrence_check(const std::vector<Rational>& seq, const UniPoly& den, int start) {
    const int q = den.degree();
    if (q < 0) throw DomainError("linear_recurrence_check: zero denominator");
    if (den.coeff(0) != 1) throw DomainError("linear_recurrence_check: denominator must have constant term 1");
    if (start < 0 || static_cast<std::size_t>(start) > seq.size())
        throw DomainError("linear_recurrence_check: start outside the sequence");
    for (int k = start; k < static_cast<int>(seq.size()); ++k) {
        Rational acc(0);
        for (int j = 0; j <= q && k - j >= 0; ++j) acc += den.coeff(j) * seq[static_cast<std::size_t>(k - j)];
        if (sgn(acc) != 0) return false;
    }
    return true;
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    const auto size = static_cast<std::size_t>(m + n);
    if (size == 0) return Rational(1);
    QMatrix syl = q_zero(size, size);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = f.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            syl(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = g.coeff(n - k);
    return q_determinant(syl);
}

}  // namespace supertube::exact
