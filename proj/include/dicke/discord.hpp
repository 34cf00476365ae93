// discord.hpp — Closed-form correlation measures for evolved X states.
//
// All measures are reported in bits (logarithms base 2); 0 log 0 := 0.
#pragma once

#include <array>

#include "dicke/channel.hpp"

namespace dicke {

struct CorrelationReport {
    std::array<double, 4> eigenvalues{};  // of the evolved density matrix
    double mutual_info = 0.0;             // bits
    double classical_corr = 0.0;          // bits
    double discord = 0.0;                 // bits
    double chi = 0.0;                     // maximand of the classical correlation
};

// Mutual information I = 2 + sum_i lam_i log2 lam_i with
//   lam_{1,2} = (1 + c3 +- |mu D1|)/4,  lam_{3,4} = (1 - c3 +- |nu D2|)/4.
// The closed form requires maximally mixed marginals and the X sparsity
// pattern; anything else raises MarginalError (tolerance 1e-9).
double mutual_information(const TwoQubitDensity& rho);

// Classical correlation C = sum_{n=1,2} (1 + (-1)^n chi)/2 * log2(1 + (-1)^n chi)
// with chi = max(|c3|, (|mu D1| + |nu D2|)/2). Exact for Bell-diagonal states
// under projective measurements.
double classical_correlation(const TwoQubitDensity& rho);

// Quantum discord = mutual information - classical correlation, with all
// intermediate quantities reported.
CorrelationReport quantum_discord(const TwoQubitDensity& rho);

// Discord amplification rate of the channel on initial state x0:
//   Gamma = D(rho(t)) / D(rho(0)).
// Throws ZeroInitialDiscordError when the initial discord is <= 1e-12.
double amplification_rate(const XState& x0, const ChannelParams& ch, double gamma);

} // namespace dicke
