#pragma once

#include "supertube/tubegeom/parametric.hpp"
#include "supertube/tubegeom/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace supertube::tubegeom {

// vol M_h = sum c_k h^k with c_k = integral of tr(wedge^k S) over M.
struct TubePolynomial {
    std::vector<double> c;
    std::vector<double> errors;
    long nodes = 0;
    bool converged = false;

    double evaluate(double h) const;
    // integral of vol M_t dt from 0 to h
    double integral(double h) const;
    // c_n / vol(S^n)
    double gauss_map_degree() const;
    // c_2 / (2 pi); only meaningful for n = 2
    double euler_estimate() const;
};

double unit_sphere_volume(int n);  // vol(S^n)

TubePolynomial weyl_coefficients(const ParametricSurface& ps, const QuadratureOptions& options = {});

struct HalfTube {
    double quadrature = 0.0;  // integral of det(1 + hS) dsigma
    double error = 0.0;
    bool converged = false;
    bool beyond_focal = false;  // |h| >= focal bound: formula only
};

HalfTube half_tube_volume(const ParametricSurface& ps, double h, const QuadratureOptions& options = {});

// Signed distance t with x = foot - t n (positive inside a sphere or torus);
// empty on the medial set (sphere centre, torus core circle and axis).
std::optional<double> signed_distance(const ParametricSurface& ps, const Eigen::VectorXd& x);

struct MonteCarloOptions {
    int chunks = 64;   // fixes the random streams
    int workers = 1;   // does not affect results
};

struct MonteCarloResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
    long hits = 0;
    long rejected = 0;
    double box_volume = 0.0;
    std::uint64_t seed = 0;
    int chunks = 0;
};

// Volume of {x : t(x) strictly between 0 and h}, signed like h, from uniform
// samples in a bounding box. Built-in sphere and torus only.
MonteCarloResult monte_carlo_tube_volume(const ParametricSurface& ps, double h, long samples, std::uint64_t seed,
                                         const MonteCarloOptions& options = {});

// Piecewise-linear weight rho(t) through the given knots, zero outside them.
struct WeightProfile {
    std::vector<double> t;
    std::vector<double> value;
    double operator()(double s) const;
};

struct WeightedIntegral {
    double lhs = 0.0;  // Monte Carlo integral of rho(t(x)) dx
    double lhs_stderr = 0.0;
    double rhs = 0.0;  // integral of rho(t) vol M_t dt
    double rhs_error = 0.0;
    long rejected = 0;
};

WeightedIntegral weighted_integral(const ParametricSurface& ps, const WeightProfile& rho, long samples,
                                   std::uint64_t seed, const MonteCarloOptions& options = {},
                                   const QuadratureOptions& quad = {});

}  // namespace supertube::tubegeom
