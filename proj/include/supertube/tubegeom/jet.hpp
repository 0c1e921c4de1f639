#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace supertube::tubegeom {

// Value, gradient and Hessian with respect to m parameters, propagated
// through arithmetic (second-order forward differentiation).
struct Jet {
    double v = 0.0;
    Eigen::VectorXd g;
    Eigen::MatrixXd h;

    static Jet constant(int m, double c) { return {c, Eigen::VectorXd::Zero(m), Eigen::MatrixXd::Zero(m, m)}; }
    static Jet variable(int m, int i, double value) {
        Jet j = constant(m, value);
        j.g[i] = 1.0;
        return j;
    }
};

// f(a) given f, f', f'' at a.v
inline Jet chain(const Jet& a, double f, double df, double d2f) {
    return {f, df * a.g, df * a.h + d2f * a.g * a.g.transpose()};
}

inline Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.g + b.g, a.h + b.h}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.g - b.g, a.h - b.h}; }
inline Jet operator-(const Jet& a) { return {-a.v, -a.g, -a.h}; }
inline Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.v * b.g + b.v * a.g,
            a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose()};
}
inline Jet operator+(const Jet& a, double c) { return {a.v + c, a.g, a.h}; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return {a.v - c, a.g, a.h}; }
inline Jet operator-(double c, const Jet& a) { return {c - a.v, -a.g, -a.h}; }
inline Jet operator*(const Jet& a, double c) { return {a.v * c, a.g * c, a.h * c}; }
inline Jet operator*(double c, const Jet& a) { return a * c; }
inline Jet reciprocal(const Jet& a) {
    const double r = 1.0 / a.v;
    return chain(a, r, -r * r, 2.0 * r * r * r);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }

inline Jet sin(const Jet& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet cos(const Jet& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet sqrt(const Jet& a) {
    const double r = std::sqrt(a.v);
    return chain(a, r, 0.5 / r, -0.25 / (r * a.v));
}

}  // namespace supertube::tubegeom
