#pragma once

#include "supertube/exact/rational.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace supertube::tubegeom {

using Exponents = std::vector<int>;

// Sparse polynomial over Q in a fixed number of variables x_0..x_{n-1},
// stored as exponent vector -> nonzero coefficient.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0);

    static MultiPoly constant(int nvars, const exact::Rational& c);
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, exact::Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const exact::Rational& c);
    MultiPoly derivative(int index) const;

    exact::Rational evaluate(const std::vector<exact::Rational>& x) const;
    double evaluate(const Eigen::VectorXd& x) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const exact::Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const exact::Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check(const MultiPoly& o) const;
    int nvars_;
    std::map<Exponents, exact::Rational> terms_;
};

// e.g. "x0^2+x1^2-1"
std::string to_string(const MultiPoly& p);

}  // namespace supertube::tubegeom
