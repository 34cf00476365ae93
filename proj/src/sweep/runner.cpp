#include "dicke/sweep/runner.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "dicke/bogoliubov.hpp"
#include "dicke/discord.hpp"

namespace dicke::sweep {

namespace {

int effective_workers(int requested, std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    int w = requested > 0 ? requested : static_cast<int>(hw ? hw : 1);
    return static_cast<int>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Run fn(i) for i in [0, jobs) on a worker pool; the first exception wins and
// is rethrown on the caller thread with its job index attached.
template <typename Fn>
void parallel_for(std::size_t jobs, int workers, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = 0;

    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                    error_index = i;
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const int n = effective_workers(workers, jobs);
    pool.reserve(n);
    for (int k = 0; k < n; ++k) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const std::exception& e) {
            throw Error("sweep: job " + std::to_string(error_index) + " failed: " + e.what());
        }
    }
}

} // namespace

std::vector<PnfRow> run_pnf_sweep(const SweepConfig& cfg, std::ostream* notice) {
    const std::vector<double> lambdas = cfg.lambda_grid(notice);
    std::vector<PnfRow> rows(lambdas.size());

    parallel_for(lambdas.size(), cfg.workers, [&](std::size_t i) {
        const DickeParams p = cfg.params_at(lambdas[i]);
        const BogoliubovSolution s = solve(p);
        PnfRow& r = rows[i];
        r.lambda = lambdas[i];
        r.lambda_over_omega0 = lambdas[i] / cfg.model.omega0;
        r.phase = s.phase;
        r.eps_minus = s.eps_minus;
        r.eps_plus = s.eps_plus;
        r.gamma = photon_number_fluctuation(s);
        r.log10_gamma = std::log10(r.gamma);
        if (std::isnan(r.gamma)) {
            throw Error("pnf_sweep: gamma is NaN at lambda = " + std::to_string(lambdas[i]));
        }
    });
    return rows;
}

std::vector<DiscordRow> run_discord_sweep(const SweepConfig& cfg, std::ostream* notice) {
    const std::vector<double> lambdas = cfg.lambda_grid(notice);
    const std::vector<double> c1s = cfg.c1_grid();
    const ChannelParams ch = cfg.channel();
    const bool fixed_state = cfg.state && cfg.state->fixed.has_value();

    std::vector<DiscordRow> rows(lambdas.size() * c1s.size());
    parallel_for(rows.size(), cfg.workers, [&](std::size_t idx) {
        const std::size_t il = idx / c1s.size();
        const std::size_t ic = idx % c1s.size();

        XState x;
        if (fixed_state) {
            x = *cfg.state->fixed;
        } else {
            x = XState{c1s[ic], 0.0, 0.5 * c1s[ic]};
        }

        DiscordRow& r = rows[idx];
        r.lambda = lambdas[il];
        r.c1 = x.c1;
        r.c2 = x.c2;
        r.c3 = x.c3;
        r.gamma = photon_number_fluctuation(cfg.params_at(lambdas[il]));

        const DecoherenceFactors d = decoherence_factors(r.gamma, ch);
        r.d1_mod = d.d1_mod;
        r.d2_mod = d.d2_mod;

        ChannelParams initial = ch;
        initial.t = 0.0;
        r.discord_initial = quantum_discord(evolve_xstate(x, initial, r.gamma)).discord;
        r.discord_final = quantum_discord(evolve_xstate(x, ch, r.gamma)).discord;
        if (r.discord_initial > 1e-12) {
            r.amplification_rate = r.discord_final / r.discord_initial;
        } else {
            r.rate_defined = false;
        }
    });
    return rows;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_pnf_csv(std::ostream& out, const std::vector<PnfRow>& rows) {
    out << "lambda_mhz,lambda_over_omega0,phase,eps_minus,eps_plus,gamma,log10_gamma\n";
    for (const PnfRow& r : rows) {
        out << format_double(r.lambda) << ',' << format_double(r.lambda_over_omega0) << ','
            << to_string(r.phase) << ',' << format_double(r.eps_minus) << ','
            << format_double(r.eps_plus) << ',' << format_double(r.gamma) << ','
            << format_double(r.log10_gamma) << '\n';
    }
}

void write_discord_csv(std::ostream& out, const std::vector<DiscordRow>& rows) {
    out << "lambda_mhz,c1,c2,c3,gamma,d1_mod,d2_mod,discord_initial,discord_final,"
           "amplification_rate\n";
    for (const DiscordRow& r : rows) {
        out << format_double(r.lambda) << ',' << format_double(r.c1) << ','
            << format_double(r.c2) << ',' << format_double(r.c3) << ','
            << format_double(r.gamma) << ',' << format_double(r.d1_mod) << ','
            << format_double(r.d2_mod) << ',' << format_double(r.discord_initial) << ','
            << format_double(r.discord_final) << ',';
        if (r.rate_defined) {
            out << format_double(r.amplification_rate);
        } else {
            out << "undefined";
        }
        out << '\n';
    }
}

} // namespace dicke::sweep
