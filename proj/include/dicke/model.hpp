// model.hpp — Dicke-model parameters, phase classification, and the pump mapping
//
// All frequencies are carried in MHz (hbar = 1, angular units); time is in
// microseconds, so products like delta * t are dimensionless.
#pragma once

#include <cstdint>

#include "dicke/errors.hpp"

namespace dicke {

// N two-level atoms collectively coupled to one cavity mode:
//   H = omega a^dag a + omega0 Jz + (lambda/sqrt(N)) (a + a^dag)(J+ + J-)
struct DickeParams {
    double omega = 0.0;    // cavity effective frequency [MHz]
    double omega0 = 0.0;   // two-level splitting [MHz]
    double lambda = 0.0;   // collective coupling [MHz]
    std::int64_t atoms = 1;

    double j() const { return 0.5 * static_cast<double>(atoms); }

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

// Raw pump/cavity parameters of the driven cavity-BEC realisation.
struct PumpParams {
    double g0 = 0.0;            // max atom-cavity coupling [MHz]
    double omega_p_rabi = 0.0;  // max pump Rabi frequency [MHz]
    double delta = 0.0;         // atomic detuning omega_p - omega_A [MHz]
    double delta_c = 0.0;       // cavity detuning omega_p - omega_c [MHz]
    std::int64_t atoms = 1;

    void validate() const;
};

enum class Phase { Normal, SuperRadiant };

const char* to_string(Phase p);

// lambda_c = sqrt(omega * omega0) / 2
double critical_coupling(const DickeParams& p);

// Normal below lambda_c, super-radiant above. Couplings within relative
// tolerance 1e-12 of lambda_c are rejected with CriticalPointError: the gap
// closes there and every downstream formula diverges, so a silent clamp would
// corrupt sweeps.
Phase classify_phase(const DickeParams& p);

// Effective model parameters from pump parameters:
//   omega  = -delta_c + U0 N / 2,  U0 = g0^2 / delta
//   lambda = sqrt(N) g0 Omega_p / (2 delta)
// omega0 (the recoil splitting) is supplied by the caller.
// Throws NonPositiveFrequencyError when the resulting omega is <= 0.
DickeParams pump_to_model(const PumpParams& pp, double omega0);

} // namespace dicke
