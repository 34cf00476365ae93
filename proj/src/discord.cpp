#include "dicke/discord.hpp"

#include <cmath>

namespace dicke {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

struct XParameters {
    double c3;
    double m1;  // |mu D1|
    double m2;  // |nu D2|
};

// Pull the Bell-diagonal data out of the density matrix, rejecting inputs the
// closed forms do not cover.
XParameters extract(const TwoQubitDensity& d, double tol = 1e-9) {
    if (d.hermiticity_defect() > tol || d.trace_defect() > tol) {
        throw MarginalError("correlation measures: density matrix is not Hermitian unit-trace");
    }
    if (d.marginal_defect() > tol) {
        throw MarginalError("correlation measures: marginals deviate from maximally mixed");
    }
    const auto& r = d.rho;
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j && i + j != 3) off = std::max(off, std::abs(r(i, j)));
        }
    }
    if (off > tol) {
        throw MarginalError("correlation measures: matrix is not of X form");
    }
    XParameters x;
    x.c3 = 2.0 * (r(0, 0).real() + r(3, 3).real()) - 1.0;
    x.m1 = 4.0 * std::abs(r(0, 3));
    x.m2 = 4.0 * std::abs(r(1, 2));
    return x;
}

std::array<double, 4> eigenvalues_of(const XParameters& x) {
    return {0.25 * (1.0 + x.c3 + x.m1), 0.25 * (1.0 + x.c3 - x.m1),
            0.25 * (1.0 - x.c3 + x.m2), 0.25 * (1.0 - x.c3 - x.m2)};
}

double mutual_info_of(const XParameters& x) {
    double s = 2.0;
    for (double lam : eigenvalues_of(x)) s += xlog2x(lam);
    return s;
}

double classical_corr_of(const XParameters& x) {
    const double chi = std::max(std::abs(x.c3), 0.5 * (x.m1 + x.m2));
    return 0.5 * (xlog2x(1.0 - chi) + xlog2x(1.0 + chi));
}

} // namespace

double mutual_information(const TwoQubitDensity& rho) {
    return mutual_info_of(extract(rho));
}

double classical_correlation(const TwoQubitDensity& rho) {
    return classical_corr_of(extract(rho));
}

CorrelationReport quantum_discord(const TwoQubitDensity& rho) {
    const XParameters x = extract(rho);
    CorrelationReport rep;
    rep.eigenvalues = eigenvalues_of(x);
    rep.mutual_info = mutual_info_of(x);
    rep.chi = std::max(std::abs(x.c3), 0.5 * (x.m1 + x.m2));
    rep.classical_corr = classical_corr_of(x);
    rep.discord = rep.mutual_info - rep.classical_corr;
    return rep;
}

double amplification_rate(const XState& x0, const ChannelParams& ch, double gamma) {
    ChannelParams initial = ch;
    initial.t = 0.0;
    const double d0 = quantum_discord(evolve_xstate(x0, initial, gamma)).discord;
    if (d0 <= 1e-12) {
        throw ZeroInitialDiscordError("amplification_rate: initial discord " +
                                      std::to_string(d0) + " is not positive");
    }
    const double dt = quantum_discord(evolve_xstate(x0, ch, gamma)).discord;
    return dt / d0;
}

} // namespace dicke
