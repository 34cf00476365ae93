#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dicke/golden.hpp"
#include "dicke/sweep/config.hpp"
#include "dicke/sweep/runner.hpp"
#include "dicke/validate.hpp"

using namespace dicke;
using namespace dicke::sweep;

namespace {

const char* kFig2Json = R"({
  "model": {"omega_mhz": 20.0, "omega0_mhz": 0.05, "atoms": 100000,
            "lambda_min_mhz": 0.0, "lambda_max_mhz": 1.0, "points": 2001},
  "output": "out.csv"
})";

const char* kFig3Json = R"({
  "model": {"omega_mhz": 20.0, "omega0_mhz": 0.05, "atoms": 100000,
            "lambda_min_mhz": 0.0, "lambda_max_mhz": 1.0, "points": 41},
  "qubits": {"delta1_over_omega0": 0.001, "delta2_over_omega0": 0.0, "t_times_omega0": 1.0},
  "state": {"c1_min": 0.0, "c1_max": 0.6666666666666666, "points": 5, "rule": "c3_half_c1"},
  "output": "out.csv"
})";

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("well-formed") {
        const SweepConfig cfg = parse_config(kFig2Json);
        CHECK(cfg.model.points == 2001);
        CHECK(cfg.model.atoms == 100000);
        CHECK(cfg.output == "out.csv");
        CHECK(!cfg.qubits.has_value());
    }
    SUBCASE("malformed JSON") {
        CHECK_THROWS_AS(parse_config("{ not json"), ConfigError);
    }
    SUBCASE("missing model block") {
        CHECK_THROWS_AS(parse_config(R"({"output": "x.csv"})"), ConfigError);
    }
    SUBCASE("bad grid") {
        CHECK_THROWS_AS(parse_config(R"({"model": {"omega_mhz": 20, "omega0_mhz": 0.05,
            "atoms": 10, "lambda_min_mhz": 1.0, "lambda_max_mhz": 0.5, "points": 3}})"),
                        ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"model": {"omega_mhz": 20, "omega0_mhz": 0.05,
            "atoms": 10, "lambda_min_mhz": 0.0, "lambda_max_mhz": 0.5, "points": 0}})"),
                        ConfigError);
    }
    SUBCASE("invalid physical parameters") {
        CHECK_THROWS_AS(parse_config(R"({"model": {"omega_mhz": -20, "omega0_mhz": 0.05,
            "atoms": 10, "lambda_min_mhz": 0.0, "lambda_max_mhz": 0.5, "points": 3}})"),
                        ConfigError);
    }
    SUBCASE("unknown state rule") {
        std::string bad = kFig3Json;
        const auto pos = bad.find("c3_half_c1");
        bad.replace(pos, 10, "c3_eq_c1xx");
        CHECK_THROWS_AS(parse_config(bad), ConfigError);
    }
    SUBCASE("invalid fixed state") {
        CHECK_THROWS_AS(parse_config(R"({"model": {"omega_mhz": 20, "omega0_mhz": 0.05,
            "atoms": 10, "lambda_min_mhz": 0.0, "lambda_max_mhz": 0.5, "points": 3},
            "state": {"c1": 1.0, "c2": -1.0, "c3": -1.0}})"),
                        ConfigError);
    }
}

TEST_CASE("lambda grid and the critical nudge") {
    const SweepConfig cfg = parse_config(kFig2Json);
    std::ostringstream log;
    const std::vector<double> grid = cfg.lambda_grid(&log);
    REQUIRE(grid.size() == 2001);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 1.0);

    // the point that would sit on lambda_c moved down by exactly half a step
    const double step = 1.0 / 2000.0;
    CHECK(grid[1000] == doctest::Approx(0.5 - 0.5 * step).epsilon(1e-15));
    CHECK(log.str().find("nudged") != std::string::npos);
    for (double lam : grid) CHECK(std::abs(lam - 0.5) > 1e-12 * 0.5);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("pnf sweep") {
    SUBCASE("single point at zero coupling") {
        SweepConfig cfg = parse_config(kFig2Json);
        cfg.model.lambda_min = cfg.model.lambda_max = 0.0;
        cfg.model.points = 1;
        const auto rows = run_pnf_sweep(cfg, nullptr);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].gamma <= 1e-24);
        CHECK(rows[0].log10_gamma <= -24.0);
    }
    SUBCASE("rows are ordered and phase-labelled") {
        SweepConfig cfg = parse_config(kFig2Json);
        cfg.model.points = 41;
        const auto rows = run_pnf_sweep(cfg, nullptr);
        REQUIRE(rows.size() == 41);
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].lambda > rows[i - 1].lambda);
        CHECK(rows[4].phase == Phase::Normal);
        CHECK(rows[36].phase == Phase::SuperRadiant);
    }
    SUBCASE("byte-identical output for any worker count") {
        SweepConfig cfg = parse_config(kFig2Json);
        std::string bodies[3];
        int k = 0;
        for (int workers : {1, 3, 7}) {
            cfg.workers = workers;
            std::ostringstream os;
            write_pnf_csv(os, run_pnf_sweep(cfg, nullptr));
            bodies[k++] = os.str();
        }
        CHECK(bodies[0] == bodies[1]);
        CHECK(bodies[1] == bodies[2]);
    }
}

TEST_CASE("discord sweep") {
    const SweepConfig cfg = parse_config(kFig3Json);
    const auto rows = run_discord_sweep(cfg, nullptr);
    REQUIRE(rows.size() == 41u * 5u);

    SUBCASE("ordering by (lambda, c1)") {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const bool advanced = rows[i].lambda > rows[i - 1].lambda ||
                                  (rows[i].lambda == rows[i - 1].lambda &&
                                   rows[i].c1 > rows[i - 1].c1);
            CHECK(advanced);
        }
    }
    SUBCASE("state rule c3 = c1/2, c2 = 0") {
        for (const auto& r : rows) {
            CHECK(r.c2 == 0.0);
            CHECK(r.c3 == doctest::Approx(0.5 * r.c1).epsilon(1e-15));
        }
    }
    SUBCASE("zero-coupling column is the identity channel") {
        for (const auto& r : rows) {
            if (r.lambda == 0.0 && r.rate_defined) {
                CHECK(r.amplification_rate == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
    SUBCASE("vanishing initial correlations are data, not failures") {
        int undefined = 0;
        for (const auto& r : rows) {
            if (!r.rate_defined) {
                ++undefined;
                CHECK(r.c1 == 0.0);
            }
        }
        CHECK(undefined == 41);
        std::ostringstream os;
        write_discord_csv(os, rows);
        CHECK(os.str().find(",undefined") != std::string::npos);
    }
}

TEST_CASE("shortest round-trip float formatting") {
    for (double v : {0.1, 0.0005, 1.0 / 3.0, 234.52427706176792, -2.3e-300, 0.0}) {
        const std::string s = format_double(v);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc{});
        CHECK(back == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("golden records round-trip and tamper detection") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "dicke_golden_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SUBCASE("read/write round-trip") {
        std::vector<GoldenRecord> recs(2);
        recs[0].id = "a";
        recs[0].value = 1.2345678901234567e-5;
        recs[0].meta["cutoff"] = "24";
        recs[1].id = "b";
        recs[1].value = -3.0;
        write_golden_file((dir / "t.txt").string(), "test records", recs);
        const auto back = read_golden_file((dir / "t.txt").string());
        REQUIRE(back.size() == 2);
        CHECK(back[0].value == recs[0].value);
        CHECK(back[0].meta.at("cutoff") == "24");
        CHECK(find_record(back, "b") != nullptr);
        CHECK(find_record(back, "zz") == nullptr);
    }
    SUBCASE("malformed file is rejected") {
        std::ofstream(dir / "bad.txt") << "id=x novalue\n";
        CHECK_THROWS_AS(read_golden_file((dir / "bad.txt").string()), Error);
    }
    SUBCASE("a tampered oracle golden fails validation with a named mismatch") {
        // copy the committed goldens, corrupt one digit, re-run the oracle suite
        for (const auto& f : fs::directory_iterator("golden")) {
            fs::copy(f.path(), dir / f.path().filename());
        }
        auto recs = read_golden_file((dir / "gamma_quadratic.txt").string());
        REQUIRE(!recs.empty());
        recs[0].value *= 1.001;
        write_golden_file((dir / "gamma_quadratic.txt").string(), "tampered", recs);

        std::ostringstream log;
        const int failures = run_validation({"oracles", false, dir.string()}, log);
        CHECK(failures >= 1);
        CHECK(log.str().find("mismatch at " + recs[0].id) != std::string::npos);
    }
    fs::remove_all(dir);
}
