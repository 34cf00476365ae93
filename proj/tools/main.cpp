// dicke — sweep and validation front end.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure,
// 3 validation failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dicke/channel.hpp"
#include "dicke/sweep/config.hpp"
#include "dicke/sweep/runner.hpp"
#include "dicke/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitValidation = 3;

dicke::sweep::SweepConfig load_or_die(const std::string& path, const std::string& out_override) {
    dicke::sweep::SweepConfig cfg = dicke::sweep::load_config(path);
    if (!out_override.empty()) cfg.output = out_override;
    if (cfg.output.empty()) throw dicke::ConfigError("config: no output path given");
    return cfg;
}

template <typename Rows, typename Writer>
int emit_csv(const std::string& path, const Rows& rows, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return kExitConfig;
    }
    writer(out, rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dicke-model dephasing and discord-amplification sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    CLI::App* pnf = app.add_subcommand("pnf-sweep",
                                       "Ground-state photon-number fluctuation over a coupling grid");
    pnf->add_option("--config", config_path, "JSON sweep configuration")->required();
    pnf->add_option("--out", out_path, "output CSV path (overrides config)");

    CLI::App* disc = app.add_subcommand("discord-sweep",
                                        "Discord amplification over a (coupling, c1) grid");
    disc->add_option("--config", config_path, "JSON sweep configuration")->required();
    disc->add_option("--out", out_path, "output CSV path (overrides config)");

    std::string suite = "all";
    bool pin = false;
    std::string golden_dir = "golden";
    CLI::App* val = app.add_subcommand("validate", "Run the invariant and oracle suites");
    val->add_option("--suite", suite, "formulas | oracles | all")->capture_default_str();
    val->add_flag("--pin", pin, "regenerate golden files from the oracles");
    val->add_option("--golden", golden_dir, "golden directory")->capture_default_str();

    double waist_um = 0.0;
    double velocity_mps = 0.0;
    CLI::App* transit = app.add_subcommand("transit-time", "Cavity transit time in microseconds");
    transit->add_option("--waist-um", waist_um, "cavity waist [um]")->required();
    transit->add_option("--velocity-mps", velocity_mps, "qubit velocity [m/s]")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pnf->parsed()) {
            const auto cfg = load_or_die(config_path, out_path);
            const auto rows = dicke::sweep::run_pnf_sweep(cfg, &std::cerr);
            return emit_csv(cfg.output, rows, dicke::sweep::write_pnf_csv);
        }
        if (disc->parsed()) {
            const auto cfg = load_or_die(config_path, out_path);
            const auto rows = dicke::sweep::run_discord_sweep(cfg, &std::cerr);
            return emit_csv(cfg.output, rows, dicke::sweep::write_discord_csv);
        }
        if (val->parsed()) {
            const dicke::ValidationOptions opts{suite, pin, golden_dir};
            return dicke::run_validation(opts, std::cout) == 0 ? kExitOk : kExitValidation;
        }
        if (transit->parsed()) {
            std::cout << dicke::sweep::format_double(dicke::transit_time_us(waist_um, velocity_mps))
                      << "\n";
            return kExitOk;
        }
    } catch (const dicke::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dicke::NonPositiveInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
