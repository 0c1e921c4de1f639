#pragma once

#include "supertube/exact/rational_function.hpp"
#include "supertube/superalg/gpoly.hpp"
#include "supertube/superalg/supermatrix.hpp"

#include <optional>
#include <vector>

namespace supertube::superalg {

// Characteristic function Ber(1 + tA) of an operator with rational entries.
struct CharFunction {
    SuperDim dim;                    // dimensions of the operator's space
    exact::RationalFunction value;   // reduced, value(0) = 1
    exact::PowerSeries series;       // Taylor coefficients c_k
    std::optional<std::vector<exact::LaurentTerm>> dual;  // expansion at infinity
    int raw_num_degree = 0;          // degree of det(1 + tA00) before reduction
    int raw_den_degree = 0;          // degree of det(1 + tA11) before reduction
};

// Unreduced fraction from the block formula for Ber(1 + tA).
struct RawCharFraction {
    SuperDim dim;
    GrassmannPoly num;
    GrassmannPoly den;
};

// Coefficients of Ber(1 + tA) through `order`, from
// Ber(1 + tA) = exp(sum_k (-1)^{k+1} str(A^k) t^k / k).
GrassmannSeries char_series(const SuperMatrix& a, int order);

// num = det((1 + tA00) d - t^2 A01 adj(1 + tA11) A10), den = d^{p+1},
// d = det(1 + tA11). Degrees are at most p + pq and q + pq.
RawCharFraction char_function_raw(const SuperMatrix& a);
GrassmannSeries expand(const RawCharFraction& r, int order);

// Reduced det(1 + tA00) / det(1 + tA11) for a scalar-bodied A; the series
// is filled to order p + q + 4 and the expansion at infinity to as many
// terms. Throws DomainError for genuinely Grassmann entries.
CharFunction char_function_exact(const SuperMatrix& a);

// Wraps a bare rational function; dims are taken to be its degrees.
CharFunction char_function_of(const exact::RationalFunction& r);

struct GrassmannLaurentTerm {
    int exponent;  // power of t
    GrassmannElement coeff;
};

// Expansion of Ber(1 + tA) at t = infinity:
// Ber(1 + tA) = t^{p-q} Ber(A) Ber(1 + A^{-1}/t), giving exponents
// p-q, p-q-1, ... (`terms` entries). Throws SingularError for singular A.
std::vector<GrassmannLaurentTerm> char_dual_series(const SuperMatrix& a, int terms);

struct BerPlusMinus {
    exact::Rational ber_plus;
    exact::Rational ber_minus;
    exact::Rational res;
};

// With the reduced fraction num/den of degrees (p', q'):
// prod lambda = top coefficient of num, prod mu = top coefficient of den,
// res = Res(t^{p'} num(1/t), t^{q'} den(1/t)) (f-rows-first Sylvester sign,
// i.e. (-1)^{p'q'} prod (lambda_a - mu_b) for diagonal operators).
// Returns (res * prod lambda, res * prod mu, res). Throws DomainError when
// the operator behind R had a vanishing det A00 or det A11.
BerPlusMinus ber_plus_minus(const CharFunction& r);

// Scalar-bodied block-diagonal operator whose characteristic function is r:
// the even block is minus the companion matrix of the reversed numerator,
// the odd block minus that of the reversed denominator, so its eigenvalues
// are the negated reciprocal roots. Requires r(0) = 1.
SuperMatrix realize_operator(const exact::RationalFunction& r);

}  // namespace supertube::superalg
