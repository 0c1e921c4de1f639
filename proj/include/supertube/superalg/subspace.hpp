#pragma once

#include "supertube/exact/matrix.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/superalg/supermatrix.hpp"

#include <vector>

namespace supertube::superalg {

using Vector = std::vector<exact::Rational>;

struct QuotientCheck {
    CharFunction lhs;   // A on V/M
    CharFunction rhs;   // A on V + Pi M
    bool equal = false;
    SuperDim quotient_dim;
    SuperDim extended_dim;
};

// Characteristic functions of the operator induced on V/M and of the
// operator on V + Pi M, for a scalar-bodied A and a homogeneous basis of an
// A-invariant subspace M. The quotient is read off after completing the
// basis of M greedily with standard basis vectors of the same parity.
// Throws DomainError if a basis vector is not homogeneous, the basis is
// dependent, or M is not invariant.
QuotientCheck quotient_char_check(const SuperMatrix& a, const std::vector<Vector>& basis);

// Odd operator with rational entries on a (p|q) space: only the off-diagonal
// blocks may be nonzero.
class OddOperator {
public:
    OddOperator(SuperDim dim, exact::QMatrix matrix);
    SuperDim dim() const { return dim_; }
    const exact::QMatrix& matrix() const { return matrix_; }

private:
    SuperDim dim_;
    exact::QMatrix matrix_;
};

struct CohomologyCheck {
    CharFunction on_h;
    CharFunction on_e;
    bool equal = false;
    SuperDim cohomology_dim;
};

// Induced operator on H = ker d / im d versus A on the whole complex. Throws
// IdentityViolation naming "d^2 = 0" or "Ad = dA" when either fails.
CohomologyCheck complex_cohomology_char(const OddOperator& d, const SuperMatrix& a);

}  // namespace supertube::superalg
