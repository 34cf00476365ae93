// sampling.hpp — Deterministic random draws of valid model states and channel
// parameters, shared by the validation harness and the test suites.
#pragma once

#include <cmath>

#include "dicke/channel.hpp"
#include "dicke/detail/uniform.hpp"
#include "dicke/model.hpp"

namespace dicke::detail {

// Valid Bell-diagonal triple: the positivity region is exactly the image of
// (u, v) in [-1, 1]^2 through c1 - c2 = u (1 + c3), c1 + c2 = v (1 - c3).
inline XState sample_xstate(std::mt19937_64& g) {
    const double c3 = uniform(g, -0.98, 0.98);
    const double u = uniform(g, -1.0, 1.0);
    const double v = uniform(g, -1.0, 1.0);
    return XState{0.5 * (u * (1.0 + c3) + v * (1.0 - c3)),
                  0.5 * (v * (1.0 - c3) - u * (1.0 + c3)), c3};
}

inline ChannelParams sample_channel(std::mt19937_64& g) {
    ChannelParams ch;
    ch.delta_a = uniform(g, 0.0, 1.0);
    ch.delta_b = uniform(g, -0.5, 1.0);
    ch.omega_a_shifted = uniform(g, 0.0, 10.0);
    ch.omega_b_shifted = uniform(g, 0.0, 10.0);
    ch.t = uniform(g, 0.0, 2.0);
    return ch;
}

// Coupling at a relative distance of at least `margin` from the critical
// point; closer than ~1e-6 the transformation coefficients lose the digits the
// identity checks ask for.
inline DickeParams sample_dicke(std::mt19937_64& g, Phase phase, double margin = 1e-5) {
    DickeParams p;
    p.omega = std::exp(uniform(g, std::log(0.1), std::log(100.0)));
    p.omega0 = std::exp(uniform(g, std::log(0.001), std::log(10.0)));
    p.atoms = static_cast<std::int64_t>(std::exp(uniform(g, 0.0, std::log(1e6))));
    if (p.atoms < 1) p.atoms = 1;
    const double lc = critical_coupling(p);
    p.lambda = phase == Phase::Normal ? lc * uniform(g, 0.0, 1.0 - margin)
                                      : lc * uniform(g, 1.0 + margin, 5.0);
    return p;
}

} // namespace dicke::detail
