#pragma once

#include "supertube/random.hpp"
#include "supertube/superalg/supermatrix.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace testsupport {

using supertube::Rng;
using supertube::exact::Rational;
using supertube::superalg::GMatrix;
using supertube::superalg::GrassmannElement;
using supertube::superalg::Mask;
using supertube::superalg::SuperDim;
using supertube::superalg::SuperMatrix;

inline Rational q(long n, long d = 1) { return supertube::exact::make_rational(n, d); }

inline GrassmannElement random_homogeneous(Rng& rng, int gens, bool odd, long body_lo, long body_hi) {
    GrassmannElement e(gens);
    if (!odd) e += GrassmannElement::scalar(gens, q(rng.uniform_int(body_lo, body_hi)));
    for (Mask m = 1; m < (Mask{1} << gens); ++m) {
        if ((std::popcount(m) % 2 == 1) != odd) continue;
        if (rng.uniform_int(0, 2) != 0) continue;
        e += GrassmannElement::monomial(gens, m, q(rng.uniform_int(-3, 3), rng.uniform_int(1, 2)));
    }
    return e;
}

// Even supermatrix with body-invertible diagonal blocks (diagonally dominant
// bodies) and random odd off-diagonal blocks.
inline SuperMatrix random_invertible(Rng& rng, SuperDim dim, int gens) {
    const auto n = static_cast<std::size_t>(dim.total());
    GMatrix m(n, n, GrassmannElement(gens));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool row_odd = static_cast<int>(i) >= dim.p;
            const bool col_odd = static_cast<int>(j) >= dim.p;
            if (row_odd != col_odd)
                m(i, j) = random_homogeneous(rng, gens, true, 0, 0);
            else if (i == j)
                m(i, j) = random_homogeneous(rng, gens, false, 6, 9) * (rng.coin() ? q(1) : q(-1));
            else
                m(i, j) = random_homogeneous(rng, gens, false, -2, 2);
        }
    }
    return SuperMatrix(dim, std::move(m));
}

// Generic Grassmann matrix, no invertibility guarantee.
inline SuperMatrix random_supermatrix(Rng& rng, SuperDim dim, int gens) {
    const auto n = static_cast<std::size_t>(dim.total());
    GMatrix m(n, n, GrassmannElement(gens));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool odd = (static_cast<int>(i) >= dim.p) != (static_cast<int>(j) >= dim.p);
            m(i, j) = random_homogeneous(rng, gens, odd, -3, 3);
        }
    return SuperMatrix(dim, std::move(m));
}

inline supertube::exact::QMatrix random_qmatrix(Rng& rng, std::size_t r, std::size_t c, long lo = -3, long hi = 3) {
    supertube::exact::QMatrix m = supertube::exact::q_zero(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = q(rng.uniform_int(lo, hi));
    return m;
}

// Leibniz-formula determinant over a commutative ring.
template <class R>
R leibniz_det(const supertube::exact::Matrix<R>& m, const R& zero, const R& one) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    R total = zero;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        R term = one;
        for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
        if (inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace testsupport
