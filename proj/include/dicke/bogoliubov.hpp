// bogoliubov.hpp — Closed-form polariton spectrum of the Dicke model in the
// thermodynamic limit and the ground-state photon-number fluctuation.
#pragma once

#include <array>
#include <optional>

#include "dicke/model.hpp"

namespace dicke {

// Diagonalisation of the quadratic (Holstein-Primakoff) Hamiltonian in either
// phase. The f coefficients express the cavity operator in the polariton
// modes:  a^dag = f1 d1^dag + f2 d1 + f3 d2^dag + f4 d2.
struct BogoliubovSolution {
    Phase phase = Phase::Normal;
    double eps_minus = 0.0;     // lower polariton frequency [MHz]
    double eps_plus = 0.0;      // upper polariton frequency [MHz]
    double mixing_angle = 0.0;  // in [0, pi/2]
    std::array<double, 4> f{};  // cavity-mode transformation coefficients
    std::optional<double> xi;   // (lambda_c / lambda)^2, super-radiant only
    double alpha = 0.0;         // cavity mean-field displacement squared, photons

    // f1^2 - f2^2 + f3^2 - f4^2, equal to 1 for a canonical transformation.
    double symplectic_norm() const {
        return f[0] * f[0] - f[1] * f[1] + f[2] * f[2] - f[3] * f[3];
    }
};

// Requires classify_phase(p) == Phase::Normal; propagates CriticalPointError.
BogoliubovSolution solve_normal(const DickeParams& p);

// Requires classify_phase(p) == Phase::SuperRadiant.
BogoliubovSolution solve_superradiant(const DickeParams& p);

// Dispatch on the phase of p.
BogoliubovSolution solve(const DickeParams& p);

// The quadratic part of the super-radiant photon-number variance exists in two
// published forms that differ in the coefficient of the soft-mode term
// f1^2 f2^2 (2 vs 1). The symmetric form agrees with exact diagonalisation of
// the displaced Hamiltonian (see oracle/gamma.hpp) and is the default; the
// asymmetric form is kept selectable for comparison.
enum class SuperradiantPnfTerm { Symmetric, Asymmetric };

// Ground-state photon-number fluctuation  gamma = <n^2> - <n>^2.
//
// Normal phase:       gamma = 2 f1^2 f2^2 + 2 f3^2 f4^2 + (f1 f4 + f2 f3)^2
// Super-radiant:      same quadratic part in the primed coefficients, plus the
//                     mean-field contribution alpha [(f1+f2)^2 + (f3+f4)^2].
double photon_number_fluctuation(const BogoliubovSolution& s,
                                 SuperradiantPnfTerm term = SuperradiantPnfTerm::Symmetric);
double photon_number_fluctuation(const DickeParams& p,
                                 SuperradiantPnfTerm term = SuperradiantPnfTerm::Symmetric);

} // namespace dicke
