#include "dicke/oracle/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke::oracle {

Eigen::MatrixXd annihilation(int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("annihilation: cutoff must be >= 1");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::MatrixXd number_operator(int cutoff) {
    Eigen::VectorXd d(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) d(n) = n;
    return d.asDiagonal();
}

Eigen::MatrixXd position_sum(int cutoff) {
    const Eigen::MatrixXd a = annihilation(cutoff);
    return a + a.transpose();
}

Eigen::MatrixXd spin_jz(int atoms) {
    const double j = 0.5 * atoms;
    Eigen::VectorXd d(atoms + 1);
    for (int k = 0; k <= atoms; ++k) d(k) = -j + k;
    return d.asDiagonal();
}

Eigen::MatrixXd spin_jplus_plus_jminus(int atoms) {
    const double j = 0.5 * atoms;
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(atoms + 1, atoms + 1);
    for (int k = 0; k < atoms; ++k) {
        const double m = -j + k;
        jp(k + 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    return jp + jp.transpose();
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        }
    }
    return out;
}

} // namespace dicke::oracle
