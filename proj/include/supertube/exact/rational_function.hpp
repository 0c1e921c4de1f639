#pragma once

#include "supertube/exact/poly.hpp"
#include "supertube/exact/series.hpp"

#include <string>
#include <vector>

namespace supertube::exact {

// Reduced fraction num/den over Q, normalized so that den(0) = 1. Every
// constructor reduces by the polynomial gcd; a denominator that vanishes at
// t = 0 after reduction is rejected, as is a zero denominator.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(UniPoly::constant(1)) {}
    explicit RationalFunction(UniPoly num);
    RationalFunction(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    int num_degree() const { return num_.degree(); }
    int den_degree() const { return den_.degree(); }

    Rational operator()(const Rational& t) const;

    // Taylor expansion at t = 0 through the given order.
    PowerSeries expand(int order) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

private:
    UniPoly num_;
    UniPoly den_;
};

std::string to_string(const RationalFunction& r);

// One coefficient of a Laurent expansion: coeff * t^exponent.
struct LaurentTerm {
    int exponent;
    Rational coeff;
};

// Expansion of r at t = infinity: terms t^{d}, t^{d-1}, ... with
// d = deg num - deg den, `terms` entries in all.
std::vector<LaurentTerm> expand_at_infinity(const RationalFunction& r, int terms);

// Minimal-denominator-degree fraction N/D with deg N <= pmax, deg D <= qmax,
// D(0) = 1 whose expansion matches s through order pmax + qmax. Denominator
// degrees are tried in ascending order. Throws NotRationalError when no such
// fraction exists and DomainError on violated preconditions.
RationalFunction pade_reconstruct(const PowerSeries& s, int pmax, int qmax);

// True iff seq[k] + b1*seq[k-1] + ... + bq*seq[k-q] = 0 for every
// k >= start, where den = 1 + b1 t + ... + bq t^q. Entries before the start
// of the sequence count as zero, so the check on the Taylor coefficients of
// N/D with start = deg N + 1 is exactly the recurrence N/D implies.
bool linear_recurrence_check(const std::vector<Rational>& seq, const UniPoly& den, int start);

// Sylvester-matrix resultant with the rows of f placed first. With this
// convention Res(f, g) = lc(f)^deg g * lc(g)^deg f * prod (a_i - b_j) over
// the roots a_i of f and b_j of g; e.g. Res(t - a, t - b) = a - b.
// A constant argument c of the other degree n contributes c^n; two constants
// give 1. Zero polynomials are rejected.
Rational resultant(const UniPoly& f, const UniPoly& g);

}  // namespace supertube::exact
