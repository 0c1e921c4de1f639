#include "supertube/tubegeom/shape.hpp"

#include "supertube/error.hpp"

#include <algorithm>
#include <cmath>

namespace supertube::tubegeom {

std::vector<double> det_one_plus_t(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DomainError("det(1 + tM) needs a square matrix");
    const Eigen::Index n = m.rows();
    // With B = -M, det(x - B) = x^n + a_1 x^{n-1} + ... + a_n gives
    // det(1 + tM) = t^n det(1/t - B) = sum a_k t^k.
    const Eigen::MatrixXd b = -m;
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    out[0] = 1.0;
    Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = b * mk + out[static_cast<std::size_t>(k - 1)] * Eigen::MatrixXd::Identity(n, n);
        out[static_cast<std::size_t>(k)] = -(b * mk).trace() / static_cast<double>(k);
    }
    return out;
}

double evaluate_poly(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

double shape_residual(const ShapeData& d) {
    double r = std::abs(d.H - d.S.trace());
    r = std::max(r, (d.extended * d.normal - d.H * d.normal).cwiseAbs().maxCoeff());
    if (d.S.size() > 0) r = std::max(r, (d.extended * d.tangent_basis - d.tangent_basis * d.S).cwiseAbs().maxCoeff());
    return r;
}

}  // namespace supertube::tubegeom
