#pragma once

#include <Eigen/Dense>

#include <vector>

namespace supertube::tubegeom {

// Coefficients e_0..e_m of det(1 + tM) for a square M (Faddeev-LeVerrier).
std::vector<double> det_one_plus_t(const Eigen::MatrixXd& m);

double evaluate_poly(const std::vector<double>& coeffs, double t);

struct ShapeData {
    Eigen::VectorXd point;          // ambient coordinates
    Eigen::VectorXd normal;         // unit normal
    Eigen::MatrixXd tangent_basis;  // (n+1) x n, columns span the tangent space
    Eigen::MatrixXd S;              // Weingarten operator in tangent_basis
    double H = 0.0;                 // trace S
    Eigen::MatrixXd extended;           // S on tangent vectors, H on the normal line
};

// Largest violation of H = tr S, extended n = H n and extended T = T S.
double shape_residual(const ShapeData& d);

}  // namespace supertube::tubegeom
