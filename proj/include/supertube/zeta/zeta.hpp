#pragma once

#include "supertube/exact/rational_function.hpp"
#include "supertube/superalg/supermatrix.hpp"
#include "supertube/zeta/count.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace supertube::zeta {

struct ZetaResult {
    std::vector<std::uint64_t> counts;  // nu_1..nu_K
    exact::PowerSeries series{0};       // Z(t) through t^K
    bool integral = false;              // every series coefficient is an integer
    std::optional<exact::RationalFunction> rational;
    std::optional<superalg::SuperMatrix> realization;
};

// exp(sum nu_k t^k / k) through t^K.
exact::PowerSeries zeta_series(const std::vector<std::uint64_t>& counts);
bool has_integral_coefficients(const exact::PowerSeries& s);

// Counts nu_1..nu_K and the series built from them.
ZetaResult compute_zeta(const PrimePolyVariety& v, int K, const CountOptions& options = {});

// Pade fit on the first pmax + qmax coefficients; the remaining ones (at
// least two) must be reproduced exactly. Throws NotRationalError with
// "not yet rational within bounds" otherwise.
exact::RationalFunction zeta_rational(const ZetaResult& zr, int pmax, int qmax);

struct PredictedCounts {
    std::vector<exact::Rational> counts;  // nu_1..nu_upto from t R'/R
    bool plausible = true;                // all nonnegative integers
};
PredictedCounts predict_counts(const exact::RationalFunction& r, int upto);

// realize_operator(r), checked by recomputing its characteristic function.
// Eigenvalues of the result are the negated reciprocal roots of num and den.
superalg::SuperMatrix zeta_realize(const exact::RationalFunction& r);

}  // namespace supertube::zeta
