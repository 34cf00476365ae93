#include "dicke/oracle/gamma.hpp"

#include <cmath>
#include <string>

#include "dicke/oracle/eigs.hpp"
#include "dicke/oracle/fock.hpp"

namespace dicke::oracle {

namespace {

double variance_in_ground_state(const Eigen::MatrixXd& h, const Eigen::MatrixXd& op) {
    const GroundState g = ground_state(h);
    const Eigen::VectorXd og = op * g.vector;
    const double mean = g.vector.dot(og);
    return og.squaredNorm() - mean * mean;
}

double gamma_quadratic_at(const DickeParams& p, Phase phase, int ma, int mc) {
    const Eigen::MatrixXd na = number_operator(ma);
    const Eigen::MatrixXd xa = position_sum(ma);
    const Eigen::MatrixXd nc = number_operator(mc);
    const Eigen::MatrixXd xc = position_sum(mc);
    const Eigen::MatrixXd ia = Eigen::MatrixXd::Identity(ma + 1, ma + 1);
    const Eigen::MatrixXd ic = Eigen::MatrixXd::Identity(mc + 1, mc + 1);

    if (phase == Phase::Normal) {
        const Eigen::MatrixXd h =
            p.omega * kron(na, ic) + p.omega0 * kron(ia, nc) + p.lambda * kron(xa, xc);
        return variance_in_ground_state(h, kron(na, ic));
    }

    const double lc = critical_coupling(p);
    const double xi = (lc * lc) / (p.lambda * p.lambda);
    const double matter_omega = 0.5 * p.omega0 * (1.0 + xi) / xi;
    const double coupling = p.lambda * xi * std::sqrt(2.0 / (1.0 + xi));
    const double squeeze = p.omega0 * (1.0 - xi) * (3.0 + xi) / (8.0 * xi * (1.0 + xi));
    const double alpha = (2.0 * p.lambda / p.omega) * (2.0 * p.lambda / p.omega) * 0.5 * p.j() *
                         (1.0 - xi * xi);

    const Eigen::MatrixXd h = p.omega * kron(na, ic) + matter_omega * kron(ia, nc) +
                              squeeze * kron(ia, xc * xc) + coupling * kron(xa, xc);
    // photon number in the displaced frame, up to the constant alpha
    const Eigen::MatrixXd op = kron(na + std::sqrt(alpha) * xa, ic);
    return variance_in_ground_state(h, op);
}

double gamma_finite_at(const DickeParams& p, int ma) {
    const int n = static_cast<int>(p.atoms);
    const Eigen::MatrixXd na = number_operator(ma);
    const Eigen::MatrixXd xa = position_sum(ma);
    const Eigen::MatrixXd ia = Eigen::MatrixXd::Identity(ma + 1, ma + 1);
    const Eigen::MatrixXd jz = spin_jz(n);
    const Eigen::MatrixXd jx2 = spin_jplus_plus_jminus(n);
    const Eigen::MatrixXd ij = Eigen::MatrixXd::Identity(n + 1, n + 1);

    const Eigen::MatrixXd h = p.omega * kron(na, ij) + p.omega0 * kron(ia, jz) +
                              (p.lambda / std::sqrt(static_cast<double>(n))) * kron(xa, jx2);
    return variance_in_ground_state(h, kron(na, ij));
}

double relative_spread(double value, double a, double b) {
    const double scale = std::max(std::abs(value), 1e-12);
    return std::max(std::abs(value - a), std::abs(value - b)) / scale;
}

} // namespace

void FockTruncation::validate() const {
    if (cavity_cutoff < 8 || matter_cutoff < 8) {
        throw std::invalid_argument("FockTruncation: cutoffs must be >= 8");
    }
}

OracleResult gamma_quadratic_exact(const DickeParams& p, FockTruncation trunc, double tol) {
    trunc.validate();
    const Phase phase = classify_phase(p);

    OracleResult out;
    out.cutoff_used = trunc;
    out.value = gamma_quadratic_at(p, phase, trunc.cavity_cutoff, trunc.matter_cutoff);
    const double half_a = gamma_quadratic_at(p, phase, trunc.cavity_cutoff / 2, trunc.matter_cutoff);
    const double half_c = gamma_quadratic_at(p, phase, trunc.cavity_cutoff, trunc.matter_cutoff / 2);
    out.convergence_estimate = relative_spread(out.value, half_a, half_c);
    if (out.convergence_estimate > tol) {
        throw UnconvergedError("gamma_quadratic_exact: estimate " +
                               std::to_string(out.convergence_estimate) + " exceeds tolerance " +
                               std::to_string(tol) + " at lambda = " + std::to_string(p.lambda));
    }
    return out;
}

OracleResult gamma_finite_n(const DickeParams& p, FockTruncation trunc, double tol) {
    trunc.validate();
    p.validate();
    if (p.atoms > 64) {
        throw std::invalid_argument("gamma_finite_n: atoms > 64 is beyond desk scale");
    }

    OracleResult out;
    out.cutoff_used = trunc;
    out.value = gamma_finite_at(p, trunc.cavity_cutoff);
    const double half = gamma_finite_at(p, trunc.cavity_cutoff / 2);
    out.convergence_estimate =
        std::abs(out.value - half) / std::max(std::abs(out.value), 1e-12);
    if (out.convergence_estimate > tol) {
        throw UnconvergedError("gamma_finite_n: estimate " +
                               std::to_string(out.convergence_estimate) + " exceeds tolerance " +
                               std::to_string(tol));
    }
    return out;
}

} // namespace dicke::oracle
