// Copyright 2026 The echochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echochain/robustness.hpp"

#include <cmath>

#include "echochain/errors.hpp"
#include "echochain/parallel.hpp"

namespace echochain {

std::string protocol_name(const ProtocolTemplate &protocol) {
    return std::holds_alternative<EchoConfig>(protocol) ? "echo" : "transfer";
}

int protocol_sites(const ProtocolTemplate &protocol) {
    return std::visit([](const auto &c) { return c.n; }, protocol);
}

ProtocolTemplate with_sites(ProtocolTemplate protocol, int n) {
    std::visit([n](auto &c) { c.n = n; }, protocol);
    return protocol;
}

TrialStats run_trials(const ProtocolTemplate &protocol, double v, int trials,
                      std::uint64_t master_seed, int threads) {
    if (trials < 1) {
        throw InvalidArgument("trial count must be >= 1");
    }
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InvalidArgument("noise strength must be finite and >= 0");
    }
    TrialStats stats;
    stats.v = v;
    stats.n = protocol_sites(protocol);
    stats.protocol = protocol_name(protocol);
    stats.trials = trials;
    stats.infidelities.resize(trials);
    stats.seeds.resize(trials);
    std::vector<ConservationDrift> drifts(trials);

    // Calibrate once up front so workers only read the memo table.
    ProtocolTemplate base = protocol;
    if (auto *tc = std::get_if<TransferConfig>(&base); tc && tc->n_steps == 0) {
        tc->n_steps = calibrated_transfer_steps(tc->n, tc->engine);
    }

    parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t k) {
        const std::uint64_t seed = trial_seed(master_seed, k);
        stats.seeds[k] = seed;
        std::visit(
            [&](auto config) {
                config.noise.v = v;
                config.seed = seed;
                if constexpr (std::is_same_v<decltype(config), EchoConfig>) {
                    const EchoResult r = run_echo(config);
                    stats.infidelities[k] = r.infidelity;
                    drifts[k] = r.drift;
                } else {
                    const TransferResult r = run_transfer(config);
                    stats.infidelities[k] = r.infidelity;
                    drifts[k] = r.drift;
                }
            },
            base);
    });

    double sum = 0.0;
    for (int k = 0; k < trials; ++k) {
        sum += stats.infidelities[k];
        stats.drift.absorb(drifts[k]);
    }
    stats.mean_infidelity = sum / trials;
    double sq = 0.0;
    for (int k = 0; k < trials; ++k) {
        const double d = stats.infidelities[k] - stats.mean_infidelity;
        sq += d * d;
    }
    stats.std_infidelity = trials > 1 ? std::sqrt(sq / (trials - 1)) : 0.0;
    return stats;
}

FitResult loglog_fit(std::span<const FitPoint> points) {
    if (points.size() < 3) {
        throw InvalidArgument("log-log fit needs at least 3 points");
    }
    std::vector<double> x, y;
    for (const FitPoint &p : points) {
        if (!(p.v > 0.0) || !(p.infidelity > 0.0)) {
            throw InvalidArgument("log-log fit needs v > 0 and infidelity > 0");
        }
        x.push_back(std::log(p.v));
        y.push_back(std::log(p.infidelity));
    }
    const double m = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
        syy += (y[k] - my) * (y[k] - my);
    }
    if (sxx == 0.0) {
        throw InvalidArgument("log-log fit needs at least two distinct v");
    }
    FitResult fit;
    fit.b = sxy / sxx;
    fit.a = my - fit.b * mx;
    double ss_res = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = y[k] - (fit.a + fit.b * x[k]);
        fit.residuals.push_back(r);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

std::vector<double> log_spaced(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1) {
        throw InvalidArgument("log grid needs 0 < lo <= hi and points >= 1");
    }
    if (points == 1) {
        return {lo};
    }
    std::vector<double> grid(points);
    const double step = std::log(hi / lo) / (points - 1);
    for (int k = 0; k < points; ++k) {
        grid[k] = lo * std::exp(step * k);
    }
    grid.back() = hi;
    return grid;
}

std::uint64_t sweep_seed(std::uint64_t master_seed, int n, std::size_t v_index) {
    return trial_seed(trial_seed(master_seed, static_cast<std::uint64_t>(n)), v_index);
}

std::vector<SlopeEntry> slope_vs_n(const ProtocolTemplate &protocol,
                                   std::span<const int> n_values,
                                   std::span<const double> v_grid, int trials,
                                   std::uint64_t master_seed, int threads) {
    std::vector<SlopeEntry> entries;
    for (int n : n_values) {
        const ProtocolTemplate sized = with_sites(protocol, n);
        SlopeEntry entry;
        entry.n = n;
        std::vector<FitPoint> points;
        for (std::size_t vi = 0; vi < v_grid.size(); ++vi) {
            TrialStats stats =
                run_trials(sized, v_grid[vi], trials, sweep_seed(master_seed, n, vi), threads);
            points.push_back({stats.v, stats.mean_infidelity});
            entry.stats.push_back(std::move(stats));
        }
        try {
            entry.fit = loglog_fit(points);
            entry.fit_ok = true;
        } catch (const InvalidArgument &) {
            entry.fit_ok = false;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

ParitySplit split_by_parity(const std::vector<SlopeEntry> &entries) {
    ParitySplit split;
    for (const SlopeEntry &e : entries) {
        (e.n % 2 == 0 ? split.even : split.odd).push_back(e);
    }
    return split;
}

} // namespace echochain
