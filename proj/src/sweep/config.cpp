#include "dicke/sweep/config.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace dicke::sweep {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* block, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ConfigError(std::string("config: ") + block + "." + key + " must be a number");
    }
    return j[key].get<double>();
}

std::int64_t require_integer(const json& j, const char* block, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ConfigError(std::string("config: ") + block + "." + key + " must be an integer");
    }
    return j[key].get<std::int64_t>();
}

} // namespace

SweepConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
    }

    SweepConfig cfg;
    if (!j.contains("model") || !j["model"].is_object()) {
        throw ConfigError("config: missing model block");
    }
    const json& m = j["model"];
    cfg.model.omega = require_number(m, "model", "omega_mhz");
    cfg.model.omega0 = require_number(m, "model", "omega0_mhz");
    cfg.model.atoms = require_integer(m, "model", "atoms");
    cfg.model.lambda_min = require_number(m, "model", "lambda_min_mhz");
    cfg.model.lambda_max = require_number(m, "model", "lambda_max_mhz");
    cfg.model.points = static_cast<int>(require_integer(m, "model", "points"));

    if (cfg.model.points < 1) throw ConfigError("config: model.points must be >= 1");
    if (cfg.model.lambda_min < 0.0 || cfg.model.lambda_max < cfg.model.lambda_min) {
        throw ConfigError("config: lambda grid must satisfy 0 <= min <= max");
    }
    if (cfg.model.points == 1 && cfg.model.lambda_max != cfg.model.lambda_min) {
        throw ConfigError("config: a single-point grid needs lambda_min == lambda_max");
    }
    DickeParams probe{cfg.model.omega, cfg.model.omega0, cfg.model.lambda_min, cfg.model.atoms};
    try {
        probe.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (j.contains("qubits")) {
        const json& q = j["qubits"];
        QubitRatios r;
        r.delta1_over_omega0 = require_number(q, "qubits", "delta1_over_omega0");
        r.delta2_over_omega0 = require_number(q, "qubits", "delta2_over_omega0");
        r.t_times_omega0 = require_number(q, "qubits", "t_times_omega0");
        if (r.t_times_omega0 < 0.0) throw ConfigError("config: qubits.t_times_omega0 must be >= 0");
        cfg.qubits = r;
    }

    if (j.contains("state")) {
        const json& s = j["state"];
        StateGrid g;
        if (s.contains("c1_min")) {
            g.c1_min = require_number(s, "state", "c1_min");
            g.c1_max = require_number(s, "state", "c1_max");
            g.points = static_cast<int>(require_integer(s, "state", "points"));
            if (g.points < 1) throw ConfigError("config: state.points must be >= 1");
            if (g.c1_max < g.c1_min) throw ConfigError("config: state c1 grid must be ordered");
            if (s.contains("rule") && s["rule"].get<std::string>() != "c3_half_c1") {
                throw ConfigError("config: unknown state rule (only c3_half_c1 is defined)");
            }
        } else {
            XState x;
            x.c1 = require_number(s, "state", "c1");
            x.c2 = require_number(s, "state", "c2");
            x.c3 = require_number(s, "state", "c3");
            if (!x.is_valid()) throw ConfigError("config: state violates positivity");
            g.fixed = x;
        }
        cfg.state = g;
    }

    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("workers")) {
        cfg.workers = static_cast<int>(require_integer(j, "top-level", "workers"));
        if (cfg.workers < 0) throw ConfigError("config: workers must be >= 0");
    }
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::vector<double> SweepConfig::lambda_grid(std::ostream* notice) const {
    std::vector<double> grid(model.points);
    const double span = model.lambda_max - model.lambda_min;
    for (int i = 0; i < model.points; ++i) {
        grid[i] = model.points == 1
                      ? model.lambda_min
                      : model.lambda_min + (static_cast<double>(i) * span) / (model.points - 1);
    }

    const double lc = critical_coupling(params_at(model.lambda_min));
    const double half_step = model.points > 1 ? 0.5 * span / (model.points - 1) : 0.0;
    for (double& lam : grid) {
        if (std::abs(lam - lc) <= 1e-12 * lc && half_step > 0.0) {
            const double nudged = lam - half_step >= model.lambda_min ? lam - half_step
                                                                      : lam + half_step;
            if (notice) {
                *notice << "notice: grid point " << lam << " MHz sits on the critical coupling "
                        << lc << " MHz; nudged to " << nudged << " MHz\n";
            }
            lam = nudged;
        }
    }
    return grid;
}

std::vector<double> SweepConfig::c1_grid() const {
    if (!state) throw ConfigError("config: state block required");
    if (state->fixed) return {state->fixed->c1};
    std::vector<double> grid(state->points);
    for (int i = 0; i < state->points; ++i) {
        grid[i] = state->points == 1
                      ? state->c1_min
                      : state->c1_min + (static_cast<double>(i) * (state->c1_max - state->c1_min)) /
                                            (state->points - 1);
    }
    return grid;
}

ChannelParams SweepConfig::channel() const {
    if (!qubits) throw ConfigError("config: qubits block required");
    ChannelParams ch;
    const double d1 = qubits->delta1_over_omega0 * model.omega0;
    const double d2 = qubits->delta2_over_omega0 * model.omega0;
    ch.delta_a = 0.5 * (d1 + d2);
    ch.delta_b = 0.5 * (d1 - d2);
    ch.omega_a_shifted = 0.0;  // bare phases do not affect any reported measure
    ch.omega_b_shifted = 0.0;
    ch.t = qubits->t_times_omega0 / model.omega0;
    return ch;
}

} // namespace dicke::sweep
