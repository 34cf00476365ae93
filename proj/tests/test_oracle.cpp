#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dicke/bogoliubov.hpp"
#include "dicke/oracle/discord_scan.hpp"
#include "dicke/oracle/eigs.hpp"
#include "dicke/oracle/fock.hpp"
#include "dicke/oracle/gamma.hpp"
#include "dicke/oracle/overlap.hpp"

using namespace dicke;
using namespace dicke::oracle;

namespace {
DickeParams fig(double lambda, std::int64_t atoms = 100000) {
    return {20.0, 0.05, lambda, atoms};
}
} // namespace

TEST_CASE("fock builders") {
    const Eigen::MatrixXd a = annihilation(4);
    CHECK(a(0, 1) == doctest::Approx(1.0));
    CHECK(a(2, 3) == doctest::Approx(std::sqrt(3.0)));
    CHECK((a.transpose() * a - number_operator(4)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(symmetry_defect(position_sum(6)) == 0.0);
    CHECK(symmetry_defect(spin_jplus_plus_jminus(5)) == 0.0);
    // Jz on the N = 2 triplet ladder
    const Eigen::MatrixXd jz = spin_jz(2);
    CHECK(jz(0, 0) == doctest::Approx(-1.0));
    CHECK(jz(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("ground-state solver") {
    // two decoupled oscillators: E0 = 0, first gap = min(w, w0)
    const Eigen::MatrixXd h =
        20.0 * kron(number_operator(6), Eigen::MatrixXd::Identity(7, 7)) +
        0.05 * kron(Eigen::MatrixXd::Identity(7, 7), number_operator(6));
    const GroundState g = ground_state(h);
    CHECK(g.energy == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g.residual <= 1e-10);

    // the Lanczos path must agree with the dense path
    const GroundState gl = ground_state(h, /*dense_limit=*/10);
    CHECK(gl.energy == doctest::Approx(g.energy).epsilon(1e-10));
    CHECK(std::abs(std::abs(gl.vector.dot(g.vector)) - 1.0) <= 1e-9);
}

TEST_CASE("quadratic gamma oracle") {
    SUBCASE("vacuum at zero coupling, any cutoff") {
        CHECK(std::abs(gamma_quadratic_exact(fig(0.0), {8, 8}).value) <= 1e-12);
        CHECK(std::abs(gamma_quadratic_exact(fig(0.0), {16, 12}).value) <= 1e-12);
    }
    SUBCASE("normal phase agrees with the closed form") {
        const OracleResult r = gamma_quadratic_exact(fig(0.25), {16, 32});
        CHECK(r.value == doctest::Approx(photon_number_fluctuation(fig(0.25))).epsilon(1e-6));
        CHECK(r.convergence_estimate <= 1e-6);
    }
    SUBCASE("super-radiant phase agrees with the closed form") {
        const OracleResult r = gamma_quadratic_exact(fig(0.75), {16, 32});
        CHECK(r.value == doctest::Approx(photon_number_fluctuation(fig(0.75))).epsilon(1e-6));
    }
    SUBCASE("unconverged truncations are flagged") {
        CHECK_THROWS_AS(gamma_quadratic_exact(fig(0.45), {8, 8}), UnconvergedError);
        CHECK_THROWS_AS(gamma_quadratic_exact(fig(0.25), {16, 32}, 1e-16), UnconvergedError);
    }
    SUBCASE("cutoff floor") {
        CHECK_THROWS_AS(gamma_quadratic_exact(fig(0.25), {4, 32}), std::invalid_argument);
    }
}

TEST_CASE("finite-N gamma oracle") {
    SUBCASE("vacuum at zero coupling") {
        DickeParams p = fig(0.0);
        p.atoms = 8;
        CHECK(std::abs(gamma_finite_n(p, {12, 12}).value) <= 1e-12);
    }
    SUBCASE("single-atom working point (pinned)") {
        DickeParams p = fig(0.1);
        p.atoms = 1;
        CHECK(gamma_finite_n(p, {24, 16}).value ==
              doctest::Approx(2.4875476481630029e-05).epsilon(1e-9));
    }
    SUBCASE("approaches the thermodynamic value from below") {
        const double inf_value = photon_number_fluctuation(fig(0.25));
        DickeParams p = fig(0.25);
        p.atoms = 8;
        const double g8 = gamma_finite_n(p, {16, 16}).value;
        p.atoms = 16;
        const double g16 = gamma_finite_n(p, {16, 16}).value;
        CHECK(std::abs(g16 - inf_value) < std::abs(g8 - inf_value));
    }
    SUBCASE("desk-scale guard") {
        DickeParams p = fig(0.25);
        p.atoms = 128;
        CHECK_THROWS_AS(gamma_finite_n(p, {16, 16}), std::invalid_argument);
    }
}

TEST_CASE("decoherence overlap oracle") {
    const DickeParams p = fig(0.45);

    SUBCASE("identity propagators at t = 0") {
        ChannelParams ch;
        ch.delta_a = ch.delta_b = 0.25;
        ch.t = 0.0;
        const OverlapResult r = decoherence_overlap_exact(p, ch, {16, 48}, OverlapKind::D1);
        CHECK(std::abs(r.value - std::complex<double>(1.0, 0.0)) <= 1e-12);
    }
    SUBCASE("zero shift leaves a unit-modulus overlap") {
        ChannelParams ch;
        ch.delta_a = 0.25;
        ch.delta_b = -0.25;  // delta1 = 0, delta2 = 0.5
        ch.t = 4.0;
        CHECK(std::abs(decoherence_overlap_exact(p, ch, {16, 48}, OverlapKind::D1).value) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(decoherence_overlap_exact(p, ch, {16, 48}, OverlapKind::D2).value) < 1.0);
    }
    SUBCASE("overlap modulus never exceeds one") {
        const std::vector<double> ts = {0.004, 0.04, 0.4, 4.0};
        for (std::complex<double> d : decoherence_overlap_curve(p, 0.5, {16, 48}, ts)) {
            CHECK(std::abs(d) <= 1.0 + 1e-12);
        }
    }
    SUBCASE("short-time Gaussian law emerges as t shrinks") {
        const double delta = 0.5;
        const std::vector<double> ts = {0.008, 0.004, 0.002};
        const auto ds = decoherence_overlap_curve(p, delta, {16, 48}, ts);
        const double gamma = photon_number_fluctuation(p);
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const double predicted = 2.0 * gamma * delta * delta * ts[k] * ts[k];
            const double rel = std::abs(-std::log(std::abs(ds[k])) - predicted) / predicted;
            CHECK(rel < prev / 1.5);
            prev = rel;
        }
    }
}

TEST_CASE("brute-force discord") {
    ChannelParams id;
    id.t = 0.0;

    SUBCASE("anchors") {
        CHECK(std::abs(discord_bruteforce(evolve_xstate({0, 0, 0}, id, 0.0)).discord) <= 1e-8);
        CHECK(discord_bruteforce(evolve_xstate({1, -1, 1}, id, 0.0)).discord ==
              doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::abs(discord_bruteforce(evolve_xstate({1, 0, 0}, id, 0.0)).discord) <= 1e-8);
    }
    SUBCASE("antipodal measurement directions are equivalent") {
        const TwoQubitDensity rho = evolve_xstate({0.6, -0.2, 0.3}, id, 0.0);
        const double pi = std::numbers::pi;
        for (double theta : {0.4, 1.2}) {
            for (double phi : {0.3, 2.2}) {
                CHECK(conditional_entropy(rho, theta, phi) ==
                      doctest::Approx(conditional_entropy(rho, pi - theta, phi + pi))
                          .epsilon(1e-12));
            }
        }
    }
    SUBCASE("refinement reaches the angular tolerance") {
        const auto r = discord_bruteforce(evolve_xstate({0.5, 0.2, -0.1}, id, 0.0));
        CHECK(r.refined);
        CHECK(r.mutual_info >= r.classical_corr - 1e-12);
    }
}
