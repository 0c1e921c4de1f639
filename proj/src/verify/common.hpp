#pragma once

#include "supertube/exact/matrix.hpp"
#include "supertube/random.hpp"
#include "supertube/superalg/supermatrix.hpp"
#include "supertube/verify/suites.hpp"

#include <string>

namespace supertube::verify::detail {

using exact::QMatrix;
using exact::Rational;
using superalg::GrassmannElement;
using superalg::SuperDim;
using superalg::SuperMatrix;

inline Rational q(long n, long d = 1) { return exact::make_rational(n, d); }

// Independent stream per suite so suites can run in any order.
inline Rng suite_rng(const SuiteConfig& c, const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    return Rng(c.seed, h);
}

GrassmannElement random_homogeneous(Rng& rng, int gens, bool odd, long body_lo, long body_hi);
// Diagonal blocks with dominant diagonal bodies, so body-invertible.
SuperMatrix random_invertible(Rng& rng, SuperDim dim, int gens);
SuperMatrix random_supermatrix(Rng& rng, SuperDim dim, int gens);
QMatrix random_qmatrix(Rng& rng, std::size_t r, std::size_t c, long lo = -3, long hi = 3);
QMatrix random_invertible_q(Rng& rng, std::size_t n);
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

// Row bookkeeping for exact checks: residual counts the failures.
struct ExactTally {
    std::string label;
    int cases = 0;
    int failures = 0;
    void add(bool ok) {
        ++cases;
        if (!ok) ++failures;
    }
    Row row() const { return {label, cases, static_cast<double>(failures), 0.0, failures == 0 && cases > 0}; }
};

struct NumericTally {
    std::string label;
    double tolerance;
    int cases = 0;
    double worst = 0.0;
    bool bad = false;
    void add(double residual) {
        ++cases;
        if (!(residual <= worst)) worst = residual;
        if (!(residual < tolerance)) bad = true;
    }
    Row row() const { return {label, cases, worst, tolerance, !bad && cases > 0}; }
};

SuiteResult suite_eq12(const SuiteConfig& c);
SuiteResult suite_gauge(const SuiteConfig& c);
SuiteResult suite_tube_mc(const SuiteConfig& c);
SuiteResult suite_weyl(const SuiteConfig& c);
SuiteResult suite_ber_mult(const SuiteConfig& c);
SuiteResult suite_charfn(const SuiteConfig& c);
SuiteResult suite_prop3(const SuiteConfig& c);
SuiteResult suite_prop4(const SuiteConfig& c);
SuiteResult suite_zeta(const SuiteConfig& c);
SuiteResult suite_bridge(const SuiteConfig& c);
SuiteResult suite_determinism(const SuiteConfig& c);

}  // namespace supertube::verify::detail
