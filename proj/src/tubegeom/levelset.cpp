#include "supertube/tubegeom/levelset.hpp"

#include "supertube/error.hpp"

#include <cmath>

namespace supertube::tubegeom {

using exact::Rational;

LevelSetSurface::LevelSetSurface(MultiPoly phi) : phi_(std::move(phi)) {
    const int m = phi_.nvars();
    if (m < 2) throw DomainError("a level-set surface needs at least two ambient coordinates");
    for (int a = 0; a < m; ++a) grad_.push_back(phi_.derivative(a));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) hess_.push_back(grad_[static_cast<std::size_t>(a)].derivative(b));
}

GradHess grad_hess(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    const int m = s.ambient_dim();
    GradHess out{s.phi().evaluate(x), Eigen::VectorXd(m), Eigen::MatrixXd(m, m)};
    for (int a = 0; a < m; ++a) {
        out.grad[a] = s.gradient(a).evaluate(x);
        for (int b = 0; b < m; ++b) out.hess(a, b) = s.hessian(a, b).evaluate(x);
    }
    return out;
}

GradHessExact grad_hess(const LevelSetSurface& s, const std::vector<Rational>& x) {
    const auto m = static_cast<std::size_t>(s.ambient_dim());
    GradHessExact out{s.phi().evaluate(x), {}, exact::q_zero(m, m)};
    for (std::size_t a = 0; a < m; ++a) {
        out.grad.push_back(s.gradient(static_cast<int>(a)).evaluate(x));
        for (std::size_t b = 0; b < m; ++b) out.hess(a, b) = s.hessian(static_cast<int>(a), static_cast<int>(b)).evaluate(x);
    }
    return out;
}

namespace {

GradHess regular(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    if (x.size() != s.ambient_dim()) throw DomainError("point has the wrong dimension");
    GradHess g = grad_hess(s, x);
    const double scale = std::max(1.0, g.hess.cwiseAbs().maxCoeff());
    if (g.grad.norm() <= 1e-12 * scale) throw SingularError("singular point: gradient vanishes");
    return g;
}

}  // namespace

double dual_density_vol(const LevelSetSurface& s, const Eigen::VectorXd& x) { return regular(s, x).grad.norm(); }

double dual_density_mcurv(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    const GradHess g = regular(s, x);
    return -g.hess.trace() + g.grad.dot(g.hess * g.grad) / g.grad.squaredNorm();
}

double mean_curvature(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    return dual_density_mcurv(s, x) / dual_density_vol(s, x);
}

Eigen::MatrixXd shape_density_matrix(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    const GradHess g = regular(s, x);
    const double norm2 = g.grad.squaredNorm();
    const Eigen::VectorXd hg = g.hess * g.grad;
    return -g.hess - g.grad * g.grad.transpose() * (g.hess.trace() / norm2) +
           (g.grad * hg.transpose() + hg * g.grad.transpose()) / norm2;
}

ShapeData cal_shape_operator(const LevelSetSurface& s, const Eigen::VectorXd& x) {
    const Eigen::MatrixXd m = shape_density_matrix(s, x);
    const GradHess g = grad_hess(s, x);
    const double norm = g.grad.norm();
    const int n = s.dim();
    ShapeData d;
    d.point = x;
    d.normal = g.grad / norm;
    d.extended = m / norm;
    // Householder QR of the normal: the remaining columns of Q are an
    // orthonormal tangent basis.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(d.normal);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n + 1, n + 1);
    d.tangent_basis = q.rightCols(n);
    d.S = d.tangent_basis.transpose() * d.extended * d.tangent_basis;
    d.H = d.S.trace();
    return d;
}

LocalCharPoly local_char_poly_dual(const LevelSetSurface& s, const Eigen::VectorXd& x, double tol) {
    const ShapeData d = cal_shape_operator(s, x);
    const double h = d.normal.dot(d.extended * d.normal);
    LocalCharPoly out;
    out.full = det_one_plus_t(d.extended);
    const std::size_t n = out.full.size() - 1;
    out.reduced.assign(n, 0.0);
    // synthetic division by (1 + h t), lowest degree first
    double carry = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        out.reduced[k] = out.full[k] - h * carry;
        carry = out.reduced[k];
    }
    out.remainder = std::abs(out.full[n] - h * carry);
    if (out.remainder > tol)
        throw IdentityViolation("det(1+t extended) is not divisible by (1+tH): remainder " + std::to_string(out.remainder));
    return out;
}

Projection project_to_surface(const LevelSetSurface& s, const Eigen::VectorXd& x, int max_iterations) {
    Projection p;
    const Eigen::Index m = x.size();
    const double scale = std::max(1.0, x.norm());
    Eigen::VectorXd y = x;
    // Newton onto phi = 0 first, then Newton on the stationarity system
    // y - x + lambda grad(y) = 0, phi(y) = 0.
    for (int k = 0; k < max_iterations; ++k) {
        ++p.iterations;
        const GradHess g = grad_hess(s, y);
        const double norm2 = g.grad.squaredNorm();
        if (norm2 == 0.0) break;
        const Eigen::VectorXd step = g.grad * (g.value / norm2);
        double damping = 1.0;
        Eigen::VectorXd next = y - step;
        while (std::abs(s.phi().evaluate(next)) > std::abs(g.value) && damping > 1e-6) {
            damping *= 0.5;
            next = y - damping * step;
        }
        y = next;
        if (damping * step.norm() <= 1e-10 * scale) break;
    }
    GradHess g = grad_hess(s, y);
    if (g.grad.squaredNorm() == 0.0) {
        p.foot = y;
        return p;
    }
    double lambda = (x - y).dot(g.grad) / g.grad.squaredNorm();
    while (p.iterations < 2 * max_iterations) {
        ++p.iterations;
        g = grad_hess(s, y);
        Eigen::VectorXd f(m + 1);
        f.head(m) = y - x + lambda * g.grad;
        f[m] = g.value;
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m + 1, m + 1);
        jac.topLeftCorner(m, m) = Eigen::MatrixXd::Identity(m, m) + lambda * g.hess;
        jac.topRightCorner(m, 1) = g.grad;
        jac.bottomLeftCorner(1, m) = g.grad.transpose();
        const Eigen::VectorXd delta = jac.fullPivLu().solve(f);
        y -= delta.head(m);
        lambda -= delta[m];
        if (!delta.allFinite()) break;
        if (delta.head(m).norm() <= 1e-13 * scale) {
            p.converged = true;
            break;
        }
    }
    p.foot = y;
    g = grad_hess(s, y);
    if (g.grad.squaredNorm() > 0.0) {
        const Eigen::VectorXd n = g.grad.normalized();
        p.distance = (y - x).dot(n);
        const Eigen::VectorXd offset = x - y;
        if ((offset - offset.dot(n) * n).norm() > 1e-9 * scale) p.converged = false;
    } else {
        p.converged = false;
    }
    return p;
}

}  // namespace supertube::tubegeom
