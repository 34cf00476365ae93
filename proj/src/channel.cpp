#include "dicke/channel.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace dicke {

void ChannelParams::validate() const {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("ChannelParams: t must be >= 0, got " + std::to_string(t));
    }
}

bool XState::is_valid(double tol) const {
    return std::abs(c1 - c2) <= 1.0 + c3 + tol && std::abs(c1 + c2) <= 1.0 - c3 + tol &&
           std::abs(c1) <= 1.0 + tol && std::abs(c2) <= 1.0 + tol && std::abs(c3) <= 1.0 + tol;
}

void XState::validate() const {
    if (!is_valid()) {
        throw InvalidStateError("XState: (c1, c2, c3) = (" + std::to_string(c1) + ", " +
                                std::to_string(c2) + ", " + std::to_string(c3) +
                                ") violates positivity");
    }
}

double TwoQubitDensity::hermiticity_defect() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double TwoQubitDensity::trace_defect() const {
    return std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
}

double TwoQubitDensity::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (rho + rho.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double TwoQubitDensity::marginal_defect() const {
    Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                a(i, j) += rho(2 * i + k, 2 * j + k);
                b(i, j) += rho(2 * k + i, 2 * k + j);
            }
        }
    }
    const Eigen::Matrix2cd half = 0.5 * Eigen::Matrix2cd::Identity();
    return std::max((a - half).cwiseAbs().maxCoeff(), (b - half).cwiseAbs().maxCoeff());
}

bool TwoQubitDensity::is_valid(double psd_tol, double herm_tol, double trace_tol,
                               double marginal_tol) const {
    return hermiticity_defect() <= herm_tol && trace_defect() <= trace_tol &&
           min_eigenvalue() >= -psd_tol && marginal_defect() <= marginal_tol;
}

ShiftResult dispersive_shift(const QubitParams& q, double cavity_omega) {
    if (q.g < 0.0) {
        throw std::invalid_argument("dispersive_shift: coupling g must be >= 0");
    }
    const double detuning = q.splitting - cavity_omega;
    if (detuning == 0.0) {
        throw ZeroDetuningError("dispersive_shift: qubit resonant with the cavity");
    }
    ShiftResult out;
    out.shift = q.g * q.g / detuning;
    out.dispersive_warning = std::abs(detuning) < 10.0 * q.g;
    return out;
}

DecoherenceFactors decoherence_factors(double gamma, const ChannelParams& ch) {
    if (!(gamma >= 0.0)) {
        throw std::invalid_argument("decoherence_factors: gamma must be >= 0");
    }
    ch.validate();
    const double d1t = ch.delta1() * ch.t;
    const double d2t = ch.delta2() * ch.t;
    DecoherenceFactors out;
    out.d1_mod = std::exp(-2.0 * gamma * d1t * d1t);
    out.d2_mod = std::exp(-2.0 * gamma * d2t * d2t);
    out.short_time_warning = std::abs(d1t) > 0.1 || std::abs(d2t) > 0.1;
    return out;
}

TwoQubitDensity evolve_xstate(const XState& x, const ChannelParams& ch, double gamma) {
    x.validate();
    const DecoherenceFactors d = decoherence_factors(gamma, ch);

    const std::complex<double> i1(0.0, 1.0);
    const std::complex<double> mu =
        (x.c1 - x.c2) * std::exp(-i1 * (ch.omega_a_shifted + ch.omega_b_shifted) * ch.t);
    const std::complex<double> nu =
        (x.c1 + x.c2) * std::exp(-i1 * (ch.omega_a_shifted - ch.omega_b_shifted) * ch.t);

    TwoQubitDensity out;
    out.rho(0, 0) = out.rho(3, 3) = 0.25 * (1.0 + x.c3);
    out.rho(1, 1) = out.rho(2, 2) = 0.25 * (1.0 - x.c3);
    out.rho(0, 3) = 0.25 * mu * d.d1_mod;
    out.rho(3, 0) = std::conj(out.rho(0, 3));
    out.rho(1, 2) = 0.25 * nu * d.d2_mod;
    out.rho(2, 1) = std::conj(out.rho(1, 2));
    return out;
}

double transit_time_us(double waist_um, double velocity_mps) {
    if (!(waist_um > 0.0) || !(velocity_mps > 0.0)) {
        throw NonPositiveInputError("transit_time: waist and velocity must both be positive");
    }
    // um / (m/s) = 1e-6 s = 1 us
    return waist_um / velocity_mps;
}

} // namespace dicke
