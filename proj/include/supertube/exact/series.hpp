#pragma once

#include "supertube/exact/poly.hpp"
#include "supertube/exact/rational.hpp"

#include <vector>

namespace supertube::exact {

// Power series truncated at an explicit order (inclusive). The coefficient
// list always has order()+1 entries. Binary operations on mixed orders
// truncate to the smaller order; nothing extends the order implicitly.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries from_poly(const UniPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    PowerSeries truncated(int order) const;
    PowerSeries derivative() const;  // order drops by one (floor 0)
    PowerSeries inverse() const;     // requires nonzero constant term

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const PowerSeries& o);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

// exp of a series with zero constant term, via k*e_k = sum_{j=1..k} j*s_j*e_{k-j}.
PowerSeries series_exp(const PowerSeries& s);

// log of a series with constant term 1; inverse of series_exp.
PowerSeries series_log(const PowerSeries& s);

}  // namespace supertube::exact
