#pragma once

#include "supertube/tubegeom/jet.hpp"
#include "supertube/tubegeom/shape.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace supertube::tubegeom {

struct ParamDomain {
    double lo = 0.0;
    double hi = 1.0;
    bool periodic = false;
};

// x(u) as jets of the chart parameters.
using ChartFn = std::function<std::vector<Jet>(const std::vector<Jet>&)>;

struct Embedding {
    Eigen::VectorXd x;                  // n+1
    Eigen::MatrixXd jacobian;           // (n+1) x n, column i = dx/du^i
    std::vector<Eigen::MatrixXd> second;  // per ambient coordinate a: d^2 x^a / du^i du^j
};

enum class SurfaceKind { sphere, torus, chart };

// Parametrized hypersurface in E^{n+1}. Built-ins carry the outward normal;
// a user chart takes the normal N_a = det[e_a | dx/du^1 ... dx/du^n]
// (x_u x x_v for n = 2).
class ParametricSurface {
public:
    // Hyperspherical chart: x_0 = R cos u1, ..., x_n = R sin u1 ... sin u_n
    // with u_1..u_{n-1} in [0, pi] and u_n periodic in [0, 2 pi].
    static ParametricSurface sphere(double radius, int n);
    // ((R + r cos v) cos u, (R + r cos v) sin u, r sin v), both periodic.
    static ParametricSurface torus(double major, double minor);
    static ParametricSurface chart(int n, ChartFn fn, std::vector<ParamDomain> domains, bool closed = false);

    SurfaceKind kind() const { return kind_; }
    std::string kind_name() const;
    int dim() const { return n_; }
    int ambient_dim() const { return n_ + 1; }
    double major_radius() const { return major_; }
    double minor_radius() const { return minor_; }
    bool closed() const { return closed_; }
    const std::vector<ParamDomain>& domains() const { return domains_; }

    Embedding evaluate(const Eigen::VectorXd& u) const;
    Eigen::VectorXd normal(const Embedding& e) const;

    // Largest |h| for which the tube map stays injective near the surface
    // (R for spheres, min(r, R - r) for tori, infinity for charts).
    double focal_bound() const;

private:
    SurfaceKind kind_ = SurfaceKind::chart;
    int n_ = 0;
    double major_ = 0.0;
    double minor_ = 0.0;
    bool closed_ = false;
    ChartFn fn_;
    std::vector<ParamDomain> domains_;
};

// g_ij, normal and S^j_i = g^{jk} n . d^2x/du^k du^i in the coordinate basis
// (S v = -d_v n); extended = S on the tangent space plus H on the normal line.
ShapeData weingarten_parametric(const ParametricSurface& ps, const Eigen::VectorXd& u);

// sqrt(det g) on its own.
double area_element(const ParametricSurface& ps, const Eigen::VectorXd& u);

// sqrt(det g(u)) det(1 + t S(u)) for the tube map x(u) - t n(u).
double tube_jacobian(const ParametricSurface& ps, const Eigen::VectorXd& u, double t);

}  // namespace supertube::tubegeom
