// overlap.hpp — Exact decoherence overlaps by spectral decomposition:
//   D(t) = <G| exp(+i (H + delta n) t) exp(-i (H - delta n) t) |G>
// where H is the quadratic Hamiltonian of the classified phase, n the photon
// number operator in that frame, and |G> the truncated-Fock ground state.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dicke/channel.hpp"
#include "dicke/model.hpp"
#include "dicke/oracle/gamma.hpp"

namespace dicke::oracle {

enum class OverlapKind { D1, D2 };

struct OverlapResult {
    std::complex<double> value{1.0, 0.0};
    FockTruncation cutoff_used;
    double convergence_estimate = 0.0;
};

// Full complex overlap for the flight time in `ch`; the shift is delta1 or
// delta2 according to `which`. Convergence is certified against halved
// cutoffs. Throws UnconvergedError past `tol`.
OverlapResult decoherence_overlap_exact(const DickeParams& p, const ChannelParams& ch,
                                        FockTruncation trunc, OverlapKind which,
                                        double tol = 1e-6);

// Overlaps at several times for one shift, reusing the two spectral
// decompositions. No convergence certification; used by the validation
// harness which certifies separately.
std::vector<std::complex<double>> decoherence_overlap_curve(const DickeParams& p, double delta,
                                                            FockTruncation trunc,
                                                            std::span<const double> times);

} // namespace dicke::oracle
