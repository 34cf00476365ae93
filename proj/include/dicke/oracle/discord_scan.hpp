// discord_scan.hpp — Measurement-optimisation discord for arbitrary two-qubit
// states: projective measurements on qubit B parameterised by a Bloch vector,
// coarse grid search plus local refinement.
#pragma once

#include "dicke/channel.hpp"

namespace dicke::oracle {

struct DiscordScanResult {
    double discord = 0.0;         // bits
    double mutual_info = 0.0;     // bits
    double classical_corr = 0.0;  // bits
    double theta = 0.0;           // optimal measurement direction
    double phi = 0.0;
    bool refined = false;         // local refinement reached the angular tolerance
};

// Always returns; if refinement stalls the best grid point is reported with
// refined = false.
DiscordScanResult discord_bruteforce(const TwoQubitDensity& rho, int theta_points = 32,
                                     int phi_points = 64, double angle_tol = 1e-6);

// Average conditional entropy of qubit A after measuring B along (theta, phi).
// Exposed for the measurement-parameterisation tests.
double conditional_entropy(const TwoQubitDensity& rho, double theta, double phi);

} // namespace dicke::oracle
