#include "dicke/oracle/overlap.hpp"

#include <cmath>

#include "dicke/oracle/eigs.hpp"
#include "dicke/oracle/fock.hpp"

namespace dicke::oracle {

namespace {

struct Frame {
    Eigen::MatrixXd hamiltonian;
    Eigen::MatrixXd photon_number;  // displaced in the super-radiant frame
};

Frame build_frame(const DickeParams& p, int ma, int mc) {
    const Eigen::MatrixXd na = number_operator(ma);
    const Eigen::MatrixXd xa = position_sum(ma);
    const Eigen::MatrixXd nc = number_operator(mc);
    const Eigen::MatrixXd xc = position_sum(mc);
    const Eigen::MatrixXd ia = Eigen::MatrixXd::Identity(ma + 1, ma + 1);
    const Eigen::MatrixXd ic = Eigen::MatrixXd::Identity(mc + 1, mc + 1);

    Frame f;
    if (classify_phase(p) == Phase::Normal) {
        f.hamiltonian =
            p.omega * kron(na, ic) + p.omega0 * kron(ia, nc) + p.lambda * kron(xa, xc);
        f.photon_number = kron(na, ic);
        return f;
    }
    const double lc = critical_coupling(p);
    const double xi = (lc * lc) / (p.lambda * p.lambda);
    const double matter_omega = 0.5 * p.omega0 * (1.0 + xi) / xi;
    const double coupling = p.lambda * xi * std::sqrt(2.0 / (1.0 + xi));
    const double squeeze = p.omega0 * (1.0 - xi) * (3.0 + xi) / (8.0 * xi * (1.0 + xi));
    const double alpha = (2.0 * p.lambda / p.omega) * (2.0 * p.lambda / p.omega) * 0.5 * p.j() *
                         (1.0 - xi * xi);
    f.hamiltonian = p.omega * kron(na, ic) + matter_omega * kron(ia, nc) +
                    squeeze * kron(ia, xc * xc) + coupling * kron(xa, xc);
    f.photon_number =
        kron(na + std::sqrt(alpha) * xa, ic) + alpha * Eigen::MatrixXd::Identity(na.rows() * ic.rows(), na.rows() * ic.rows());
    return f;
}

std::vector<std::complex<double>> overlaps_from_frame(const Frame& f, double delta,
                                                      std::span<const double> times) {
    if (f.hamiltonian.rows() > 5000) {
        throw std::invalid_argument("decoherence_overlap: dimension exceeds the dense limit");
    }
    const Eigen::VectorXd g = ground_state(f.hamiltonian).vector;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> plus(f.hamiltonian + delta * f.photon_number);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> minus(f.hamiltonian - delta * f.photon_number);
    if (plus.info() != Eigen::Success || minus.info() != Eigen::Success) {
        throw std::runtime_error("decoherence_overlap: eigendecomposition failed");
    }

    const Eigen::VectorXd g_minus = minus.eigenvectors().transpose() * g;
    const std::complex<double> i1(0.0, 1.0);
    std::vector<std::complex<double>> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXcd v =
            minus.eigenvectors() * (((-i1 * t) * minus.eigenvalues().array()).exp() *
                                    g_minus.array().cast<std::complex<double>>())
                                       .matrix();
        Eigen::VectorXcd w = plus.eigenvectors().transpose() * v;
        w = (((i1 * t) * plus.eigenvalues().array()).exp() * w.array()).matrix();
        v = plus.eigenvectors() * w;
        out.push_back(g.cast<std::complex<double>>().dot(v));
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> decoherence_overlap_curve(const DickeParams& p, double delta,
                                                            FockTruncation trunc,
                                                            std::span<const double> times) {
    trunc.validate();
    return overlaps_from_frame(build_frame(p, trunc.cavity_cutoff, trunc.matter_cutoff), delta,
                               times);
}

OverlapResult decoherence_overlap_exact(const DickeParams& p, const ChannelParams& ch,
                                        FockTruncation trunc, OverlapKind which, double tol) {
    trunc.validate();
    ch.validate();
    const double delta = which == OverlapKind::D1 ? ch.delta1() : ch.delta2();
    const double ts[1] = {ch.t};

    OverlapResult out;
    out.cutoff_used = trunc;
    out.value = overlaps_from_frame(build_frame(p, trunc.cavity_cutoff, trunc.matter_cutoff),
                                    delta, ts)[0];
    const std::complex<double> half =
        overlaps_from_frame(build_frame(p, trunc.cavity_cutoff / 2, trunc.matter_cutoff / 2),
                            delta, ts)[0];
    out.convergence_estimate = std::abs(out.value - half) / std::max(std::abs(out.value), 1e-12);
    if (out.convergence_estimate > tol) {
        throw UnconvergedError("decoherence_overlap_exact: estimate " +
                               std::to_string(out.convergence_estimate) + " exceeds tolerance");
    }
    return out;
}

} // namespace dicke::oracle
