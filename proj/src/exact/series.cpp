#include "supertube/exact/series.hpp"

#include "supertube/error.hpp"

#include <algorithm>

namespace supertube::exact {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw DomainError("power series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::from_poly(const UniPoly& p, int order) {
    PowerSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s[k] = p.coeff(k);
    return s;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot truncate a series to a higher order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries out(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) out[k - 1] = coeffs_[static_cast<std::size_t>(k)] * k;
    return out;
}

PowerSeries PowerSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) throw DomainError("series inverse needs a nonzero constant term");
    PowerSeries out(order());
    const Rational inv0 = 1 / coeffs_[0];
    out[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * out[k - j];
        out[k] = -acc * inv0;
    }
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
    const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(v);
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries series_exp(const PowerSeries& s) {
    if (sgn(s[0]) != 0) throw DomainError("series_exp needs a zero constant term");
    PowerSeries e(s.order());
    e[0] = 1;
    for (int k = 1; k <= s.order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += s[j] * j * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

PowerSeries series_log(const PowerSeries& s) {
    if (s[0] != 1) throw DomainError("series_log needs constant term 1");
    // log s = integral of s'/s
    PowerSeries quotient = s.derivative() / s.truncated(std::max(s.order() - 1, 0));
    PowerSeries out(s.order());
    for (int k = 1; k <= s.order(); ++k) out[k] = quotient[k - 1] / k;
    return out;
}

}  // namespace supertube::exact
