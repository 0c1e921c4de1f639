#pragma once

#include "supertube/exact/matrix.hpp"
#include "supertube/tubegeom/multipoly.hpp"
#include "supertube/tubegeom/shape.hpp"

#include <Eigen/Dense>

#include <vector>

namespace supertube::tubegeom {

// Hypersurface {phi = 0} in E^{n+1}; gradient and Hessian are exact
// polynomial derivatives computed once.
class LevelSetSurface {
public:
    explicit LevelSetSurface(MultiPoly phi);

    int dim() const { return phi_.nvars() - 1; }
    int ambient_dim() const { return phi_.nvars(); }
    const MultiPoly& phi() const { return phi_; }
    const MultiPoly& gradient(int a) const { return grad_[static_cast<std::size_t>(a)]; }
    const MultiPoly& hessian(int a, int b) const {
        return hess_[static_cast<std::size_t>(a * ambient_dim() + b)];
    }

private:
    MultiPoly phi_;
    std::vector<MultiPoly> grad_;
    std::vector<MultiPoly> hess_;
};

struct GradHess {
    double value = 0.0;
    Eigen::VectorXd grad;
    Eigen::MatrixXd hess;
};

struct GradHessExact {
    exact::Rational value;
    std::vector<exact::Rational> grad;
    exact::QMatrix hess;
};

GradHess grad_hess(const LevelSetSurface& s, const Eigen::VectorXd& x);
GradHessExact grad_hess(const LevelSetSurface& s, const std::vector<exact::Rational>& x);

// sqrt(d_a phi d_a phi); throws SingularError ("singular point") when the
// gradient vanishes.
double dual_density_vol(const LevelSetSurface& s, const Eigen::VectorXd& x);
// -d_a d_a phi + d_a phi d_b phi d_a d_b phi / |grad phi|^2
double dual_density_mcurv(const LevelSetSurface& s, const Eigen::VectorXd& x);
// Ratio of the two densities; the unit sphere x.x - 1 gives -n (normal
// grad phi / |grad phi|, S v = -d_v n).
double mean_curvature(const LevelSetSurface& s, const Eigen::VectorXd& x);
// M_ab = -d_a d_b phi - d_a phi d_b phi lap(phi) / |grad phi|^2
//        + (d_a phi (Hess grad phi)_b + d_b phi (Hess grad phi)_a) / |grad phi|^2
Eigen::MatrixXd shape_density_matrix(const LevelSetSurface& s, const Eigen::VectorXd& x);

// extended = M / |grad phi| together with S read off in an orthonormal tangent
// basis.
ShapeData cal_shape_operator(const LevelSetSurface& s, const Eigen::VectorXd& x);

struct LocalCharPoly {
    std::vector<double> full;     // det(1 + t extended), degree n+1
    std::vector<double> reduced;  // full / (1 + tH), degree n
    double remainder = 0.0;       // |remainder of that division|
};

// Throws IdentityViolation when the remainder exceeds `tol`.
LocalCharPoly local_char_poly_dual(const LevelSetSurface& s, const Eigen::VectorXd& x, double tol = 1e-8);

struct Projection {
    Eigen::VectorXd foot;   // point on the surface
    double distance = 0.0;  // signed: x = foot - distance * normal(foot)
    int iterations = 0;
    bool converged = false;
};

// Damped Newton projection along the gradient onto phi = 0, at most
// `max_iterations` steps.
Projection project_to_surface(const LevelSetSurface& s, const Eigen::VectorXd& x, int max_iterations = 50);

}  // namespace supertube::tubegeom
