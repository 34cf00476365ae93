#include "dicke/model.hpp"

#include <cmath>
#include <string>

namespace dicke {

void DickeParams::validate() const {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("DickeParams: omega must be > 0, got " + std::to_string(omega));
    }
    if (!(omega0 > 0.0)) {
        throw std::invalid_argument("DickeParams: omega0 must be > 0, got " + std::to_string(omega0));
    }
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("DickeParams: lambda must be >= 0, got " + std::to_string(lambda));
    }
    if (atoms < 1) {
        throw std::invalid_argument("DickeParams: atoms must be >= 1, got " + std::to_string(atoms));
    }
}

void PumpParams::validate() const {
    if (delta == 0.0) {
        throw std::invalid_argument("PumpParams: delta must be nonzero");
    }
    if (atoms < 1) {
        throw std::invalid_argument("PumpParams: atoms must be >= 1, got " + std::to_string(atoms));
    }
}

const char* to_string(Phase p) {
    return p == Phase::Normal ? "normal" : "superradiant";
}

double critical_coupling(const DickeParams& p) {
    p.validate();
    return 0.5 * std::sqrt(p.omega * p.omega0);
}

Phase classify_phase(const DickeParams& p) {
    const double lc = critical_coupling(p);
    if (std::abs(p.lambda - lc) <= 1e-12 * lc) {
        throw CriticalPointError("classify_phase: lambda = " + std::to_string(p.lambda) +
                                 " MHz sits at the critical coupling " + std::to_string(lc) + " MHz");
    }
    return p.lambda < lc ? Phase::Normal : Phase::SuperRadiant;
}

DickeParams pump_to_model(const PumpParams& pp, double omega0) {
    pp.validate();
    const double n = static_cast<double>(pp.atoms);
    const double u0 = pp.g0 * pp.g0 / pp.delta;
    const double omega = -pp.delta_c + 0.5 * u0 * n;
    if (!(omega > 0.0)) {
        throw NonPositiveFrequencyError("pump_to_model: effective cavity frequency " +
                                        std::to_string(omega) + " MHz is not positive");
    }
    const double lambda = std::sqrt(n) * pp.g0 * pp.omega_p_rabi / (2.0 * pp.delta);
    DickeParams out{omega, omega0, lambda, pp.atoms};
    out.validate();
    return out;
}

} // namespace dicke
