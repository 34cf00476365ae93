#include "dicke/oracle/discord_scan.hpp"

#include <cmath>
#include <numbers>

namespace dicke::oracle {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

double entropy_bits_2x2(const Eigen::Matrix2cd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) s -= xlog2x(std::max(es.eigenvalues()(i), 0.0));
    return s;
}

double entropy_bits_4x4(const Eigen::Matrix4cd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s -= xlog2x(std::max(es.eigenvalues()(i), 0.0));
    return s;
}

Eigen::Matrix2cd trace_out_b(const Eigen::Matrix4cd& r) {
    Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) a(i, j) += r(2 * i + k, 2 * j + k);
    return a;
}

Eigen::Matrix2cd trace_out_a(const Eigen::Matrix4cd& r) {
    Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) b(i, j) += r(2 * k + i, 2 * k + j);
    return b;
}

Eigen::Matrix2cd bloch_projector(double theta, double phi) {
    const std::complex<double> i1(0.0, 1.0);
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Eigen::Matrix2cd p;
    p << 0.5 * (1.0 + nz), 0.5 * (nx - i1 * ny), 0.5 * (nx + i1 * ny), 0.5 * (1.0 - nz);
    return p;
}

// Tr_B[(I (x) P) rho (I (x) P)] for a projector P; P^2 = P lets us apply P once.
Eigen::Matrix2cd conditioned_a(const Eigen::Matrix4cd& r, const Eigen::Matrix2cd& p) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out(i, j) += r(2 * i + k, 2 * j + l) * p(l, k);
                }
            }
        }
    }
    return out;
}

} // namespace

double conditional_entropy(const TwoQubitDensity& rho, double theta, double phi) {
    const Eigen::Matrix2cd p = bloch_projector(theta, phi);
    const Eigen::Matrix2cd q = Eigen::Matrix2cd::Identity() - p;
    double total = 0.0;
    for (const auto* proj : {&p, &q}) {
        Eigen::Matrix2cd sub = conditioned_a(rho.rho, *proj);
        const double pk = sub.trace().real();
        if (pk > 1e-14) total += pk * entropy_bits_2x2(sub / pk);
    }
    return total;
}

DiscordScanResult discord_bruteforce(const TwoQubitDensity& rho, int theta_points,
                                     int phi_points, double angle_tol) {
    const double pi = std::numbers::pi;
    const double s_a = entropy_bits_2x2(trace_out_b(rho.rho));
    const double s_b = entropy_bits_2x2(trace_out_a(rho.rho));
    const double s_ab = entropy_bits_4x4(rho.rho);

    DiscordScanResult out;
    out.mutual_info = s_a + s_b - s_ab;

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= theta_points; ++i) {
        const double theta = pi * i / theta_points;
        for (int k = 0; k < phi_points; ++k) {
            const double phi = 2.0 * pi * k / phi_points;
            const double v = conditional_entropy(rho, theta, phi);
            if (v < best) {
                best = v;
                out.theta = theta;
                out.phi = phi;
            }
        }
    }

    // coordinate descent with a shrinking stencil
    double step = pi / theta_points;
    int evals = 0;
    const int max_evals = 20000;
    while (step > angle_tol && evals < max_evals) {
        bool improved = false;
        const double cand[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const auto& c : cand) {
            const double v = conditional_entropy(rho, out.theta + c[0], out.phi + c[1]);
            ++evals;
            if (v < best - 1e-15) {
                best = v;
                out.theta += c[0];
                out.phi += c[1];
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    out.refined = step <= angle_tol;

    out.classical_corr = s_a - best;
    out.discord = out.mutual_info - out.classical_corr;
    return out;
}

} // namespace dicke::oracle
