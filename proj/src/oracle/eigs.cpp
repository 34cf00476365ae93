#include "dicke/oracle/eigs.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dicke::oracle {

namespace {

GroundState dense_ground_state(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("ground_state: dense eigensolver failed");
    }
    GroundState g;
    g.energy = es.eigenvalues()(0);
    g.vector = es.eigenvectors().col(0);
    g.residual = (h * g.vector - g.energy * g.vector).norm();
    return g;
}

GroundState lanczos_ground_state(const Eigen::MatrixXd& h) {
    const Eigen::Index n = h.rows();
    const int max_iter = 400;
    const double scale = h.cwiseAbs().maxCoeff();

    // Deterministic start with nonzero weight on every basis state.
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = 1.0 / (1.0 + static_cast<double>(i));
    v.normalize();

    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;
    Eigen::VectorXd w;

    GroundState g;
    for (int it = 0; it < max_iter; ++it) {
        basis.push_back(v);
        w = h * v;
        alpha.push_back(v.dot(w));
        w -= alpha.back() * v;
        if (!beta.empty()) w -= beta.back() * basis[basis.size() - 2];
        // full reorthogonalisation keeps the Krylov basis clean
        for (const auto& b : basis) w -= b.dot(w) * b;
        for (const auto& b : basis) w -= b.dot(w) * b;

        const int m = static_cast<int>(alpha.size());
        if (m >= 2 && it % 4 == 3) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
            for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
            Eigen::VectorXd y = es.eigenvectors().col(0);
            Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
            for (int i = 0; i < m; ++i) x += y(i) * basis[i];
            x.normalize();
            const double e = x.dot(h * x);
            const double res = (h * x - e * x).norm();
            if (res <= 1e-10 * std::max(1.0, scale)) {
                g.energy = e;
                g.vector = x;
                g.residual = res;
                return g;
            }
        }

        const double bnorm = w.norm();
        if (bnorm < 1e-14 * std::max(1.0, scale)) break;  // Krylov space exhausted
        beta.push_back(bnorm);
        v = w / bnorm;
    }

    // final attempt with everything accumulated
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
    for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXd y = es.eigenvectors().col(0);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) x += y(i) * basis[i];
    x.normalize();
    g.energy = x.dot(h * x);
    g.vector = x;
    g.residual = (h * x - g.energy * x).norm();
    if (g.residual > 1e-10 * std::max(1.0, scale)) {
        throw std::runtime_error("ground_state: Lanczos residual " + std::to_string(g.residual) +
                                 " did not reach tolerance");
    }
    return g;
}

} // namespace

GroundState ground_state(const Eigen::MatrixXd& h, int dense_limit) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw std::invalid_argument("ground_state: matrix must be square and nonempty");
    }
    if (h.rows() <= dense_limit) return dense_ground_state(h);
    return lanczos_ground_state(h);
}

double symmetry_defect(const Eigen::MatrixXd& h) {
    return (h - h.transpose()).cwiseAbs().maxCoeff();
}

} // namespace dicke::oracle
