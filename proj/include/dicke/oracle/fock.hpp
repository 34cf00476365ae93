// fock.hpp — Dense operator builders on truncated Fock and spin spaces.
#pragma once

#include <Eigen/Dense>

namespace dicke::oracle {

// Annihilation operator on a Fock space truncated at occupation `cutoff`
// (dimension cutoff + 1): a[n-1, n] = sqrt(n).
Eigen::MatrixXd annihilation(int cutoff);

// Number operator diag(0, 1, ..., cutoff).
Eigen::MatrixXd number_operator(int cutoff);

// Quadrature a + a^dag.
Eigen::MatrixXd position_sum(int cutoff);

// Collective spin operators on the (2j+1)-dimensional Dicke ladder for
// j = atoms/2, in the Jz eigenbasis ordered m = -j ... +j.
Eigen::MatrixXd spin_jz(int atoms);
Eigen::MatrixXd spin_jplus_plus_jminus(int atoms);

// Kronecker product, left factor varying slowest.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

} // namespace dicke::oracle
