// channel.hpp — The effective phase-decoherence channel the cavity-BEC system
// imposes on two far-detuned atomic qubits.
#pragma once

#include <Eigen/Dense>

#include "dicke/errors.hpp"

namespace dicke {

struct QubitParams {
    double g = 0.0;         // qubit-cavity coupling [MHz]
    double splitting = 0.0; // bare level splitting [MHz]
};

// Channel parameters after the dispersive elimination of the cavity. The
// combinations delta1 = dA + dB and delta2 = dA - dB are always derived, never
// stored, so they cannot drift out of sync.
struct ChannelParams {
    double delta_a = 0.0;          // dispersive shift of qubit A [MHz]
    double delta_b = 0.0;          // dispersive shift of qubit B [MHz]
    double omega_a_shifted = 0.0;  // shifted splitting of qubit A [MHz]
    double omega_b_shifted = 0.0;  // shifted splitting of qubit B [MHz]
    double t = 0.0;                // interaction (flight) time [us]

    double delta1() const { return delta_a + delta_b; }
    double delta2() const { return delta_a - delta_b; }

    void validate() const;  // t >= 0
};

// Bell-diagonal parameter triple of the initial two-qubit state
//   rho(0) = (I + c1 XX + c2 YY + c3 ZZ) / 4.
struct XState {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    // Positivity: |c1 - c2| <= 1 + c3 and |c1 + c2| <= 1 - c3.
    bool is_valid(double tol = 1e-12) const;
    void validate() const;  // throws InvalidStateError
};

// 4x4 density matrix in the ordered basis {|ee>, |eg>, |ge>, |gg>}.
struct TwoQubitDensity {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

    double hermiticity_defect() const;    // max |rho - rho^dag|
    double trace_defect() const;          // |tr(rho) - 1|
    double min_eigenvalue() const;
    double marginal_defect() const;       // max deviation of either marginal from I/2
    bool is_valid(double psd_tol = 1e-10, double herm_tol = 1e-12,
                  double trace_tol = 1e-12, double marginal_tol = 1e-12) const;
};

struct ShiftResult {
    double shift = 0.0;             // g^2 / Delta [MHz]
    bool dispersive_warning = false; // |Delta| < 10 g: dispersive expansion is marginal
};

// Photon-number-dependent qubit shift g^2/Delta with Delta = splitting - cavity_omega.
// Throws ZeroDetuningError at exact resonance.
ShiftResult dispersive_shift(const QubitParams& q, double cavity_omega);

struct DecoherenceFactors {
    double d1_mod = 1.0;            // |D1(t)| = exp(-2 gamma delta1^2 t^2)
    double d2_mod = 1.0;            // |D2(t)| = exp(-2 gamma delta2^2 t^2)
    bool short_time_warning = false; // delta1 t or delta2 t exceeds 0.1
};

// Gaussian short-time decoherence factors for a given ground-state
// photon-number fluctuation gamma. Exceeding the short-time window is a
// warning, not an error: exploratory sweeps should be told, not blocked.
DecoherenceFactors decoherence_factors(double gamma, const ChannelParams& ch);

// Evolved X state:
//   diagonal (1 +- c3)/4 unchanged;
//   outer corner  mu(t) D1 / 4,  mu = (c1 - c2) exp(-i (wA' + wB') t);
//   inner corner  nu(t) D2 / 4,  nu = (c1 + c2) exp(-i (wA' - wB') t).
// Only the moduli of D1, D2 enter; every correlation measure downstream
// depends on |mu D1| and |nu D2| alone.
TwoQubitDensity evolve_xstate(const XState& x, const ChannelParams& ch, double gamma);

// Flight time through a cavity waist: t [us] = waist [um] / velocity [m/s].
// The short-time treatment assumes v >> 1e-3 m/s for micrometre waists.
double transit_time_us(double waist_um, double velocity_mps);

} // namespace dicke
