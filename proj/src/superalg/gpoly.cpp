#include "supertube/superalg/gpoly.hpp"

#include "supertube/error.hpp"

#include <algorithm>

namespace supertube::superalg {

GrassmannPoly::GrassmannPoly(int generators, std::vector<GrassmannElement> coeffs)
    : n_(generators), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.generators() != n_) throw DomainError("GrassmannPoly: generator-count mismatch");
    trim();
}

GrassmannPoly GrassmannPoly::constant(const GrassmannElement& c) { return GrassmannPoly(c.generators(), {c}); }

GrassmannPoly GrassmannPoly::linear(const GrassmannElement& c0, const GrassmannElement& c1) {
    return GrassmannPoly(c0.generators(), {c0, c1});
}

void GrassmannPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GrassmannElement GrassmannPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return GrassmannElement(n_);
    return coeffs_[static_cast<std::size_t>(k)];
}

bool GrassmannPoly::is_scalar() const {
    for (const auto& c : coeffs_)
        if (!c.is_scalar()) return false;
    return true;
}

exact::UniPoly GrassmannPoly::to_scalar() const {
    if (!is_scalar()) throw DomainError("polynomial has non-scalar Grassmann coefficients");
    std::vector<exact::Rational> v;
    for (const auto& c : coeffs_) v.push_back(c.body());
    return exact::UniPoly(std::move(v));
}

GrassmannPoly& GrassmannPoly::operator+=(const GrassmannPoly& o) {
    if (o.n_ != n_) throw DomainError("GrassmannPoly: generator-count mismatch");
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), GrassmannElement(n_));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

GrassmannPoly& GrassmannPoly::operator-=(const GrassmannPoly& o) {
    if (o.n_ != n_) throw DomainError("GrassmannPoly: generator-count mismatch");
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), GrassmannElement(n_));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

GrassmannPoly operator*(const GrassmannPoly& a, const GrassmannPoly& b) {
    if (a.n_ != b.n_) throw DomainError("GrassmannPoly: generator-count mismatch");
    if (a.is_zero() || b.is_zero()) return GrassmannPoly(a.n_);
    std::vector<GrassmannElement> v(a.coeffs_.size() + b.coeffs_.size() - 1, GrassmannElement(a.n_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return GrassmannPoly(a.n_, std::move(v));
}

GrassmannPoly GrassmannPoly::pow(unsigned e) const {
    GrassmannPoly result = constant(GrassmannElement::scalar(n_, 1));
    GrassmannPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

GrassmannSeries::GrassmannSeries(int generators, int order) : n_(generators) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, GrassmannElement(generators));
}

GrassmannSeries GrassmannSeries::from_poly(const GrassmannPoly& p, int order) {
    GrassmannSeries s(p.generators(), order);
    for (int k = 0; k <= order && k <= p.degree(); ++k) s[k] = p.coeff(k);
    return s;
}

bool GrassmannSeries::is_scalar() const {
    for (const auto& c : coeffs_)
        if (!c.is_scalar()) return false;
    return true;
}

exact::PowerSeries GrassmannSeries::to_scalar() const {
    if (!is_scalar()) throw DomainError("series has non-scalar Grassmann coefficients");
    std::vector<exact::Rational> v;
    for (const auto& c : coeffs_) v.push_back(c.body());
    return exact::PowerSeries(std::move(v));
}

GrassmannSeries operator*(const GrassmannSeries& a, const GrassmannSeries& b) {
    const int order = std::min(a.order(), b.order());
    GrassmannSeries out(a.n_, order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

GrassmannSeries operator-(const GrassmannSeries& a, const GrassmannSeries& b) {
    const int order = std::min(a.order(), b.order());
    GrassmannSeries out(a.n_, order);
    for (int k = 0; k <= order; ++k) out[k] = a[k] - b[k];
    return out;
}

GrassmannSeries GrassmannSeries::inverse() const {
    const GrassmannElement inv0 = grassmann_inverse(coeffs_[0]);
    GrassmannSeries out(n_, order());
    out[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        GrassmannElement acc(n_);
        for (int j = 1; j <= k; ++j) acc += (*this)[j] * out[k - j];
        out[k] = -(acc * inv0);
    }
    return out;
}

GrassmannSeries series_exp(const GrassmannSeries& s) {
    if (!s[0].is_zero()) throw DomainError("series_exp needs a zero constant term");
    GrassmannSeries e(s.generators(), s.order());
    e[0] = GrassmannElement::scalar(s.generators(), 1);
    for (int k = 1; k <= s.order(); ++k) {
        GrassmannElement acc(s.generators());
        for (int j = 1; j <= k; ++j) acc += s[j] * e[k - j] * exact::Rational(j);
        e[k] = acc * exact::Rational(1, k);
    }
    return e;
}

}  // namespace supertube::superalg
