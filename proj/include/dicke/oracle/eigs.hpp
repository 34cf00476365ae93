// eigs.hpp — Ground-state solvers for the oracle Hamiltonians.
#pragma once

#include <Eigen/Dense>

namespace dicke::oracle {

struct GroundState {
    double energy = 0.0;
    Eigen::VectorXd vector;
    double residual = 0.0;  // ||H v - E v||
};

// Lowest eigenpair of a real symmetric matrix. Dimensions up to
// `dense_limit` go through a full dense solve; larger problems use Lanczos
// with full reorthogonalisation, a fixed deterministic start vector, and a
// residual check of 1e-10 relative to the matrix scale (throws
// std::runtime_error if that cannot be met).
GroundState ground_state(const Eigen::MatrixXd& h, int dense_limit = 5000);

// max |H - H^T| — all oracle Hamiltonians must be symmetric to round-off.
double symmetry_defect(const Eigen::MatrixXd& h);

} // namespace dicke::oracle
