#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dicke/model.hpp"

using namespace dicke;

TEST_CASE("critical coupling") {
    CHECK(critical_coupling({20.0, 0.05, 0.0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(critical_coupling({20.0, 0.05, 0.0, 1}) / 0.05 == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(critical_coupling({1.0, 1.0, 0.0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(critical_coupling({4.0, 0.01, 0.0, 1}) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("phase classification") {
    CHECK(classify_phase({20.0, 0.05, 0.25, 1}) == Phase::Normal);
    CHECK(classify_phase({20.0, 0.05, 0.6, 1}) == Phase::SuperRadiant);
    CHECK_THROWS_AS(classify_phase({20.0, 0.05, 0.5, 1}), CriticalPointError);

    // the rejection window is relative, 1e-12
    CHECK_THROWS_AS(classify_phase({20.0, 0.05, 0.5 * (1.0 + 1e-13), 1}), CriticalPointError);
    CHECK(classify_phase({20.0, 0.05, 0.5 * (1.0 + 1e-9), 1}) == Phase::SuperRadiant);
    CHECK(classify_phase({20.0, 0.05, 0.5 * (1.0 - 1e-9), 1}) == Phase::Normal);
}

TEST_CASE("parameter invariants") {
    CHECK_THROWS_AS((DickeParams{-1.0, 0.05, 0.1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DickeParams{20.0, 0.0, 0.1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DickeParams{20.0, 0.05, -0.1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DickeParams{20.0, 0.05, 0.1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PumpParams{1.0, 1.0, 0.0, 0.0, 10}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DickeParams{20.0, 0.05, 0.0, 1}.validate()));
}

TEST_CASE("pump mapping") {
    // g0 = 1, delta = 10 -> U0 = 0.1; atoms = 1e5 -> U0 N/2 = 5000;
    // delta_c = 4980 gives omega = 20.
    PumpParams pp{1.0, 0.0, 10.0, 4980.0, 100000};

    SUBCASE("no pump, no coupling") {
        const DickeParams p = pump_to_model(pp, 0.05);
        CHECK(p.lambda == 0.0);
        CHECK(p.omega == doctest::Approx(20.0).epsilon(1e-15));
        CHECK(p.omega0 == 0.05);
        CHECK(p.atoms == 100000);
    }

    SUBCASE("lambda is linear in the pump Rabi frequency") {
        pp.omega_p_rabi = 0.0158;
        const double lam1 = pump_to_model(pp, 0.05).lambda;
        pp.omega_p_rabi = 0.0316;
        const double lam2 = pump_to_model(pp, 0.05).lambda;
        CHECK(lam2 == doctest::Approx(2.0 * lam1).epsilon(1e-15));
    }

    SUBCASE("round trip through the defining product") {
        pp.omega_p_rabi = 0.0158;
        const double lam = pump_to_model(pp, 0.05).lambda;
        pp.omega_p_rabi = 2.0 * pp.delta * lam / (std::sqrt(1e5) * pp.g0);
        CHECK(pump_to_model(pp, 0.05).lambda == doctest::Approx(lam).epsilon(1e-14));
    }

    SUBCASE("non-positive effective frequency is rejected") {
        pp.delta_c = 1e9;
        CHECK_THROWS_AS(pump_to_model(pp, 0.05), NonPositiveFrequencyError);
    }
}

TEST_CASE("phase names") {
    CHECK(std::string(to_string(Phase::Normal)) == "normal");
    CHECK(std::string(to_string(Phase::SuperRadiant)) == "superradiant");
}
