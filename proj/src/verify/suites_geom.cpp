#include "common.hpp"
#include "supertube/tubegeom/levelset.hpp"
#include "supertube/tubegeom/tube.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace supertube::verify::detail {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using namespace tubegeom;

namespace {

constexpr double kPi = std::numbers::pi;

MultiPoly random_poly(Rng& rng, int m, int deg) {
    MultiPoly p(m);
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    while (true) {
        int total = 0;
        for (int k : e) total += k;
        if (total <= deg && rng.uniform_int(0, 2) == 0) p.add_term(e, q(rng.uniform_int(-3, 3)));
        std::size_t k = 0;
        while (k < e.size() && ++e[k] > deg) e[k++] = 0;
        if (k == e.size()) break;
    }
    return p;
}

std::vector<Rational> dyadic_point(Rng& rng, int m) {
    std::vector<Rational> x;
    for (int i = 0; i < m; ++i) x.push_back(q(rng.uniform_int(-16, 16), 16));
    return x;
}

VectorXd to_vec(const std::vector<Rational>& x) {
    VectorXd v(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = x[i].get_d();
    return v;
}

// phi = P - P(x0) through a dyadic x0 with |grad phi(x0)| >= 1.
std::pair<LevelSetSurface, VectorXd> random_level_set(Rng& rng, int m, int deg) {
    while (true) {
        const MultiPoly p = random_poly(rng, m, deg);
        const auto x0 = dyadic_point(rng, m);
        LevelSetSurface s(p - MultiPoly::constant(m, p.evaluate(x0)));
        Rational norm2 = 0;
        for (const auto& g : grad_hess(s, x0).grad) norm2 += g * g;
        if (norm2 >= 1) return {s, to_vec(x0)};
    }
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Weingarten map in an orthonormal tangent basis built by Gram-Schmidt:
// S = -Q^T Hess Q / |grad|; returns prod (1 + kappa_i t) and H = tr S.
std::pair<std::vector<double>, double> tangent_oracle(const GradHess& g) {
    const auto m = g.grad.size();
    const double norm = g.grad.norm();
    const VectorXd n = g.grad / norm;
    std::vector<VectorXd> basis;
    for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(basis.size()) < m - 1; ++i) {
        VectorXd v = VectorXd::Unit(m, i) - n * n[i];
        for (const auto& b : basis) v -= b * b.dot(v);
        if (v.norm() > 1e-6) basis.push_back(v.normalized());
    }
    MatrixXd qm(m, m - 1);
    for (Eigen::Index j = 0; j < m - 1; ++j) qm.col(j) = basis[static_cast<std::size_t>(j)];
    const MatrixXd s = -qm.transpose() * g.hess * qm / norm;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(s);
    std::vector<double> c{1.0};
    for (Eigen::Index i = 0; i < s.rows(); ++i) c = poly_mul(c, {1.0, es.eigenvalues()[i]});
    return {c, s.trace()};
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
        d = std::max(d, std::abs((i < a.size() ? a[i] : 0.0) - (i < b.size() ? b[i] : 0.0)));
    return d;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

SuiteResult suite_eq12(const SuiteConfig& c) {
    SuiteResult r{"eq12", "det(1 + t extended) = det(1 + tS)(1 + tH) at regular points of random level sets", {}};
    Rng rng = suite_rng(c, r.name);
    const double tol = c.tolerance("eq12");
    constexpr int kSurfaces = 10, kPoints = 20;
    for (int s = 0; s < kSurfaces; ++s) {
        const int m = s < kSurfaces / 2 ? 3 : 4;
        const auto [surface, x0] = random_level_set(rng, m, 4);
        NumericTally t{"E" + std::to_string(m) + " #" + std::to_string(s + 1) + " " + to_string(surface.phi()), tol};
        std::vector<VectorXd> points{x0};
        for (int attempt = 0; attempt < 400 && static_cast<int>(points.size()) < kPoints; ++attempt) {
            VectorXd y = x0;
            for (Eigen::Index i = 0; i < y.size(); ++i) y[i] += rng.uniform(-0.5, 0.5);
            const Projection p = project_to_surface(surface, y);
            if (!p.converged || (p.foot - x0).norm() > 1.5) continue;
            if (grad_hess(surface, p.foot).grad.norm() < 0.5) continue;
            points.push_back(p.foot);
        }
        for (const auto& x : points) {
            const GradHess g = grad_hess(surface, x);
            const auto [reduced, h] = tangent_oracle(g);
            const auto full = det_one_plus_t(cal_shape_operator(surface, x).extended);
            t.add(max_diff(full, poly_mul(reduced, {1.0, h})));
        }
        Row row = t.row();
        if (row.cases < kPoints) row.passed = false;
        r.rows.push_back(row);
    }
    return r;
}

SuiteResult suite_gauge(const SuiteConfig& c) {
    SuiteResult r{"gauge", "A_vol, A_mcurv and M_ab scale by G under phi -> G phi (G > 0)", {}};
    Rng rng = suite_rng(c, r.name);
    const double tol = c.tolerance("gauge");
    NumericTally vol{"A_vol", tol}, mcurv{"A_mcurv", tol}, mab{"M_ab", tol}, mean{"H unchanged", tol};
    for (int trial = 0; trial < 20; ++trial) {
        const int m = trial % 2 == 0 ? 3 : 4;
        const auto [surface, x] = random_level_set(rng, m, 3);
        MultiPoly lin = MultiPoly::constant(m, q(rng.uniform_int(-2, 2)));
        for (int i = 0; i < m; ++i) lin += MultiPoly::variable(m, i) * q(rng.uniform_int(-2, 2));
        const MultiPoly gpoly = MultiPoly::constant(m, 1) + lin * lin;
        const LevelSetSurface scaled(surface.phi() * gpoly);
        const double g = gpoly.evaluate(x);
        vol.add(rel(dual_density_vol(scaled, x), g * dual_density_vol(surface, x)));
        mcurv.add(rel(dual_density_mcurv(scaled, x), g * dual_density_mcurv(surface, x)));
        const MatrixXd expected = g * shape_density_matrix(surface, x);
        mab.add((shape_density_matrix(scaled, x) - expected).cwiseAbs().maxCoeff() /
                std::max(1.0, expected.cwiseAbs().maxCoeff()));
        mean.add(rel(mean_curvature(scaled, x), mean_curvature(surface, x)));
    }
    r.rows = {vol.row(), mcurv.row(), mab.row(), mean.row()};
    return r;
}

SuiteResult suite_tube_mc(const SuiteConfig& c) {
    SuiteResult r{"tube-mc", "half-tube quadrature against closed forms and Monte Carlo tube volumes", {}};
    const ParametricSurface sphere = ParametricSurface::sphere(1.0, 2);
    MonteCarloOptions mc;
    mc.chunks = c.mc_chunks;
    mc.workers = c.workers;
    const double sigma = c.tolerance("mc_sigma");
    std::uint64_t stream = 0;
    for (double h : {0.1, 0.25, 0.4}) {
        NumericTally quad{"sphere quadrature h=" + std::to_string(h).substr(0, 4), c.tolerance("quadrature")};
        quad.add(std::abs(half_tube_volume(sphere, h).quadrature - 4 * kPi * (1 - h) * (1 - h)));
        r.rows.push_back(quad.row());
        // the shell between the sphere and its parallel at distance h
        const double shell = 4 * kPi * (1 - std::pow(1 - h, 3)) / 3;
        const MonteCarloResult m = monte_carlo_tube_volume(sphere, h, static_cast<long>(c.mc_samples),
                                                           c.seed + 1000 * ++stream, mc);
        NumericTally t{"sphere MC h=" + std::to_string(h).substr(0, 4) + " (sigmas)", sigma};
        t.add(std::abs(m.estimate - shell) / m.stderr_);
        r.rows.push_back(t.row());
    }
    const ParametricSurface torus = ParametricSurface::torus(2.0, 1.0);
    const TubePolynomial w = weyl_coefficients(torus);
    const MonteCarloResult m = monte_carlo_tube_volume(torus, 0.25, static_cast<long>(c.mc_samples),
                                                       c.seed + 1000 * ++stream, mc);
    NumericTally t{"torus MC h=0.25 (sigmas)", sigma};
    t.add(std::abs(m.estimate - w.integral(0.25)) / m.stderr_);
    r.rows.push_back(t.row());
    return r;
}

SuiteResult suite_weyl(const SuiteConfig& c) {
    SuiteResult r{"weyl", "Weyl coefficients and vol M_h + vol M_-h - 2 vol M = 4 pi chi h^2", {}};
    const double tol = c.tolerance("weyl");
    const ParametricSurface sphere = ParametricSurface::sphere(1.0, 2);
    const ParametricSurface torus = ParametricSurface::torus(2.0, 1.0);
    const TubePolynomial ws = weyl_coefficients(sphere);
    const TubePolynomial wt = weyl_coefficients(torus);
    const double expected_sphere[3] = {4 * kPi, -8 * kPi, 4 * kPi};
    for (int k = 0; k < 3; ++k) {
        NumericTally t{"sphere c_" + std::to_string(k), tol};
        t.add(std::abs(ws.c[static_cast<std::size_t>(k)] - expected_sphere[k]));
        r.rows.push_back(t.row());
    }
    NumericTally t0{"torus c_0 = 4 pi^2 R r", tol}, t2{"torus c_2 = 0", tol};
    t0.add(std::abs(wt.c[0] - 8 * kPi * kPi));
    t2.add(std::abs(wt.c[2]));
    r.rows.push_back(t0.row());
    r.rows.push_back(t2.row());
    const double h = 0.2;
    for (auto [name, surface, chi] : {std::tuple{"sphere", &sphere, 2.0}, std::tuple{"torus", &torus, 0.0}}) {
        NumericTally t{std::string(name) + " two-sided identity h=0.2", c.tolerance("identity")};
        const double lhs = half_tube_volume(*surface, h).quadrature + half_tube_volume(*surface, -h).quadrature -
                           2 * half_tube_volume(*surface, 0.0).quadrature;
        t.add(std::abs(lhs - 4 * kPi * chi * h * h));
        r.rows.push_back(t.row());
    }
    return r;
}

}  // namespace supertube::verify::detail
