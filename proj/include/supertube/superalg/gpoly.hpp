#pragma once

#include "supertube/exact/poly.hpp"
#include "supertube/exact/series.hpp"
#include "supertube/superalg/grassmann.hpp"

#include <vector>

namespace supertube::superalg {

// Polynomial in t with Grassmann coefficients; trailing zeros trimmed.
class GrassmannPoly {
public:
    explicit GrassmannPoly(int generators = 0) : n_(generators) {}
    GrassmannPoly(int generators, std::vector<GrassmannElement> coeffs);

    static GrassmannPoly constant(const GrassmannElement& c);
    // c0 + c1 t
    static GrassmannPoly linear(const GrassmannElement& c0, const GrassmannElement& c1);

    int generators() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<GrassmannElement>& coeffs() const { return coeffs_; }
    GrassmannElement coeff(int k) const;
    bool is_scalar() const;
    // Requires is_scalar().
    exact::UniPoly to_scalar() const;

    GrassmannPoly& operator+=(const GrassmannPoly& o);
    GrassmannPoly& operator-=(const GrassmannPoly& o);
    friend GrassmannPoly operator+(GrassmannPoly a, const GrassmannPoly& b) { return a += b; }
    friend GrassmannPoly operator-(GrassmannPoly a, const GrassmannPoly& b) { return a -= b; }
    friend GrassmannPoly operator*(const GrassmannPoly& a, const GrassmannPoly& b);
    GrassmannPoly& operator*=(const GrassmannPoly& o) { return *this = *this * o; }
    friend bool operator==(const GrassmannPoly& a, const GrassmannPoly& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    GrassmannPoly pow(unsigned e) const;

private:
    void trim();
    int n_;
    std::vector<GrassmannElement> coeffs_;
};

// Power series with Grassmann coefficients, explicit order as in PowerSeries.
// Division and exp assume the coefficients involved commute (even elements),
// which is the case for every series built from characteristic functions.
class GrassmannSeries {
public:
    GrassmannSeries(int generators, int order);
    static GrassmannSeries from_poly(const GrassmannPoly& p, int order);

    int generators() const { return n_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GrassmannElement>& coeffs() const { return coeffs_; }
    const GrassmannElement& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    GrassmannElement& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool is_scalar() const;
    exact::PowerSeries to_scalar() const;  // throws DomainError if not scalar

    friend GrassmannSeries operator*(const GrassmannSeries& a, const GrassmannSeries& b);
    friend GrassmannSeries operator-(const GrassmannSeries& a, const GrassmannSeries& b);
    GrassmannSeries inverse() const;  // constant term must have nonzero body
    friend bool operator==(const GrassmannSeries& a, const GrassmannSeries& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    std::vector<GrassmannElement> coeffs_;
};

GrassmannSeries series_exp(const GrassmannSeries& s);

}  // namespace supertube::superalg
