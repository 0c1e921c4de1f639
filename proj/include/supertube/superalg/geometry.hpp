#pragma once

#include "supertube/superalg/supermatrix.hpp"

#include <vector>

namespace supertube::superalg {

// Metric on the (n+1 | 2m) Euclidean superspace with
// G_AB z^A z^B = x.x + 2 th1 th2 + ... + 2 th_{2m-1} th_{2m}: the identity on
// the even block, and on the odd block G(2i-1, 2i) = 1 = -G(2i, 2i-1).
SuperMatrix super_metric(int n, int m, int generators = 0);

// g_IJ = sum_AB (dz^A/dw^I) G_AB (dz^B/dw^J) (-1)^{p(B)(p(J)+1)}.
// `jacobian` has one row per ambient coordinate (ambient.p even rows first)
// and one column per parameter (params.p even columns first); entry (A, I)
// must have parity p(A) + p(I).
SuperMatrix super_first_fundamental_form(const GMatrix& jacobian, SuperDim ambient, SuperDim params,
                                         const SuperMatrix& metric);

// sqrt(Ber g). The exact form needs a perfect-square rational body; the
// float form takes any positive body.
GrassmannElement super_volume_density(const SuperMatrix& g);
GrassmannFloat super_volume_density_float(const SuperMatrix& g);

// sum_AB d_A Phi G^{AB} d_B Phi (-1)^{p(B)}, before the square root. The
// gradient entry for coordinate A must have the parity of z^A.
GrassmannElement dual_volume_square(const std::vector<GrassmannElement>& grad, const SuperMatrix& inverse_metric);

GrassmannElement dual_super_volume_density(const std::vector<GrassmannElement>& grad,
                                           const SuperMatrix& inverse_metric);
GrassmannFloat dual_super_volume_density_float(const std::vector<GrassmannElement>& grad,
                                               const SuperMatrix& inverse_metric);

}  // namespace supertube::superalg
