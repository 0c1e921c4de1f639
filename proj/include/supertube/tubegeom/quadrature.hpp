#pragma once

#include "supertube/tubegeom/parametric.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace supertube::tubegeom {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

GaussRule gauss_legendre(int points);

struct QuadratureOptions {
    double rel_tol = 1e-10;
    long max_nodes = 1L << 22;
    int start_points = 8;  // per parameter
};

struct QuadratureResult {
    std::vector<double> values;
    std::vector<double> errors;  // |last - previous| per component
    long nodes = 0;
    bool converged = false;
};

// Vector-valued integrand: writes `components` values at the parameter point.
using Integrand = std::function<void(const Eigen::VectorXd& u, std::vector<double>& out)>;

// Tensor-product rule, trapezoid on periodic parameters and Gauss-Legendre
// otherwise; points per parameter double until successive estimates agree to
// rel_tol * max(1, |value|) or the node budget would be exceeded.
QuadratureResult integrate(const std::vector<ParamDomain>& domains, int components, const Integrand& f,
                           const QuadratureOptions& options = {});

}  // namespace supertube::tubegeom
