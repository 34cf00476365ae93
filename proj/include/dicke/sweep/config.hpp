// config.hpp — JSON sweep configuration shared by the CLI subcommands.
//
// All frequencies are MHz; the qubit block is expressed as dimensionless
// ratios against omega0 so a single file drives physically matched sweeps.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dicke/channel.hpp"
#include "dicke/model.hpp"

namespace dicke::sweep {

struct ModelGrid {
    double omega = 0.0;
    double omega0 = 0.0;
    std::int64_t atoms = 1;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int points = 1;
};

struct QubitRatios {
    double delta1_over_omega0 = 0.0;
    double delta2_over_omega0 = 0.0;
    double t_times_omega0 = 0.0;
};

struct StateGrid {
    // either a fixed triple ...
    std::optional<XState> fixed;
    // ... or a c1 grid with the constraint rule c3 = c1/2, c2 = 0
    double c1_min = 0.0;
    double c1_max = 0.0;
    int points = 1;
};

struct SweepConfig {
    ModelGrid model;
    std::optional<QubitRatios> qubits;  // required for discord sweeps
    std::optional<StateGrid> state;     // required for discord sweeps
    std::string output;                 // default output path, overridable
    int workers = 0;                    // 0 = hardware concurrency

    // Grid points in ascending lambda. Points that collide with the critical
    // coupling are nudged down by half a grid step (up at the lower edge);
    // each nudge is reported through `notice`.
    std::vector<double> lambda_grid(std::ostream* notice) const;
    std::vector<double> c1_grid() const;
    ChannelParams channel() const;  // from the ratio block

    DickeParams params_at(double lambda) const {
        return DickeParams{model.omega, model.omega0, lambda, model.atoms};
    }
};

// Throws ConfigError on malformed JSON or violated invariants.
SweepConfig parse_config(const std::string& json_text);
SweepConfig load_config(const std::string& path);

} // namespace dicke::sweep
