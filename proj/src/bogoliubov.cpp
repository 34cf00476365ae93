#include "dicke/bogoliubov.hpp"

#include <cmath>

namespace dicke {

namespace {

// Shared tail of both solvers. The effective quadratic problem is a pair of
// coupled oscillators with cavity frequency omega and matter frequency
// matter_omega; `tan_num`/`tan_den` define the mixing angle via
// tan(2 phi) = tan_num / tan_den with the branch 2 phi in [0, pi]. That branch
// keeps eps_minus the soft mode and reproduces the decoupled vacuum as the
// coupling vanishes.
BogoliubovSolution diagonalise(double omega, double matter_omega2, double coupling_term2,
                               double tan_num, double tan_den) {
    const double s = omega * omega + matter_omega2;
    const double d = matter_omega2 - omega * omega;
    const double r = std::sqrt(d * d + coupling_term2);

    BogoliubovSolution out;
    out.eps_plus = std::sqrt(0.5 * (s + r));
    // eps_minus^2 = (s - r)/2 rewritten via the determinant to avoid the
    // cancellation that dominates near the transition.
    const double det = omega * omega * matter_omega2 - 0.25 * coupling_term2;
    out.eps_minus = std::sqrt(det / (0.5 * (s + r)));

    out.mixing_angle = 0.5 * std::atan2(tan_num, tan_den);
    const double c = std::cos(out.mixing_angle);
    const double sn = std::sin(out.mixing_angle);
    const double em = out.eps_minus;
    const double ep = out.eps_plus;
    out.f = {c * (omega + em) / (2.0 * std::sqrt(em * omega)),
             c * (omega - em) / (2.0 * std::sqrt(em * omega)),
             sn * (omega + ep) / (2.0 * std::sqrt(ep * omega)),
             sn * (omega - ep) / (2.0 * std::sqrt(ep * omega))};
    return out;
}

} // namespace

BogoliubovSolution solve_normal(const DickeParams& p) {
    if (classify_phase(p) != Phase::Normal) {
        throw std::invalid_argument("solve_normal: parameters are in the super-radiant phase");
    }
    const double w = p.omega;
    const double w0 = p.omega0;
    // tan(2 phi) = 4 lambda sqrt(w w0) / (w0^2 - w^2)
    BogoliubovSolution out =
        diagonalise(w, w0 * w0, 16.0 * p.lambda * p.lambda * w * w0,
                    4.0 * p.lambda * std::sqrt(w * w0), w0 * w0 - w * w);
    out.phase = Phase::Normal;
    return out;
}

BogoliubovSolution solve_superradiant(const DickeParams& p) {
    if (classify_phase(p) != Phase::SuperRadiant) {
        throw std::invalid_argument("solve_superradiant: parameters are in the normal phase");
    }
    const double w = p.omega;
    const double w0 = p.omega0;
    const double lc = critical_coupling(p);
    const double xi = (lc * lc) / (p.lambda * p.lambda);

    // Effective matter frequency squared after displacing the condensate:
    // w0^2 / xi^2. tan(2 phi') = 2 w w0 xi^2 / (w0^2 - xi^2 w^2).
    const double m2 = (w0 / xi) * (w0 / xi);
    BogoliubovSolution out = diagonalise(w, m2, 4.0 * w * w * w0 * w0,
                                         2.0 * w * w0 * xi * xi, w0 * w0 - xi * xi * w * w);
    out.phase = Phase::SuperRadiant;
    out.xi = xi;
    const double two_lam_over_w = 2.0 * p.lambda / w;
    out.alpha = two_lam_over_w * two_lam_over_w * 0.5 * p.j() * (1.0 - xi * xi);
    return out;
}

BogoliubovSolution solve(const DickeParams& p) {
    return classify_phase(p) == Phase::Normal ? solve_normal(p) : solve_superradiant(p);
}

double photon_number_fluctuation(const BogoliubovSolution& s, SuperradiantPnfTerm term) {
    const auto [f1, f2, f3, f4] = s.f;
    const double soft = f1 * f1 * f2 * f2;
    const double cross = f1 * f4 + f2 * f3;
    double gamma = 2.0 * f3 * f3 * f4 * f4 + cross * cross;
    if (s.phase == Phase::Normal) {
        gamma += 2.0 * soft;
        return gamma;
    }
    gamma += (term == SuperradiantPnfTerm::Symmetric ? 2.0 : 1.0) * soft;
    const double sum1 = f1 + f2;
    const double sum2 = f3 + f4;
    gamma += s.alpha * (sum1 * sum1 + sum2 * sum2);
    return gamma;
}

double photon_number_fluctuation(const DickeParams& p, SuperradiantPnfTerm term) {
    return photon_number_fluctuation(solve(p), term);
}

} // namespace dicke
