// gamma.hpp — Exact-diagonalisation ground truth for the photon-number
// fluctuation: truncated-Fock solutions of the quadratic (thermodynamic-limit)
// Hamiltonians and of the full finite-N Dicke model.
#pragma once

#include "dicke/model.hpp"

namespace dicke::oracle {

struct FockTruncation {
    int cavity_cutoff = 24;  // max photon number
    int matter_cutoff = 48;  // max matter-mode excitation (quadratic case)

    void validate() const;  // cutoffs >= 8
};

struct OracleResult {
    double value = 0.0;
    FockTruncation cutoff_used;
    // Largest relative shift of the value when either cutoff is halved.
    double convergence_estimate = 0.0;
};

// Variance of the photon number in the ground state of the quadratic
// Hamiltonian of the classified phase. In the super-radiant phase the
// Hamiltonian is the displaced one and the measured operator is
// (a'^dag + sqrt(alpha))(a' + sqrt(alpha)).
// Throws UnconvergedError when halving a cutoff moves gamma by more than tol.
OracleResult gamma_quadratic_exact(const DickeParams& p, FockTruncation trunc,
                                   double tol = 1e-6);

// Exact gamma of the full Dicke Hamiltonian at finite atom number (spin-j
// ladder times truncated Fock space). Desk scale: atoms <= 64.
OracleResult gamma_finite_n(const DickeParams& p, FockTruncation trunc, double tol = 1e-6);

} // namespace dicke::oracle
