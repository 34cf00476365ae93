// runner.hpp — Parallel parameter sweeps and CSV emission.
//
// Grid points are dispatched to a bounded worker pool; workers share only the
// immutable config and write into index-addressed slots, so the emitted CSV is
// byte-identical for any worker count.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dicke/sweep/config.hpp"

namespace dicke::sweep {

struct PnfRow {
    double lambda = 0.0;
    double lambda_over_omega0 = 0.0;
    Phase phase = Phase::Normal;
    double eps_minus = 0.0;
    double eps_plus = 0.0;
    double gamma = 0.0;
    double log10_gamma = 0.0;
};

struct DiscordRow {
    double lambda = 0.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double gamma = 0.0;
    double d1_mod = 0.0, d2_mod = 0.0;
    double discord_initial = 0.0;
    double discord_final = 0.0;
    double amplification_rate = 0.0;
    bool rate_defined = true;  // false when the initial discord vanishes
};

// Rows in ascending lambda. `notice` (may be null) receives nudge logs.
std::vector<PnfRow> run_pnf_sweep(const SweepConfig& cfg, std::ostream* notice);

// Rows ordered by (lambda, c1).
std::vector<DiscordRow> run_discord_sweep(const SweepConfig& cfg, std::ostream* notice);

// Shortest round-trip decimal form of a double (inf -> "inf").
std::string format_double(double v);

void write_pnf_csv(std::ostream& out, const std::vector<PnfRow>& rows);
void write_discord_csv(std::ostream& out, const std::vector<DiscordRow>& rows);

} // namespace dicke::sweep
