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

#include "echochain/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "config.hpp"
#include "svg.hpp"

#include "echochain/echo.hpp"
#include "echochain/errors.hpp"
#include "echochain/meanfield.hpp"
#include "echochain/oracle.hpp"
#include "echochain/parallel.hpp"
#include "echochain/report.hpp"
#include "echochain/robustness.hpp"
#include "echochain/transfer.hpp"

namespace echochain::cli {
namespace {

const char *const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string color(std::size_t k) { return kPalette[k % std::size(kPalette)]; }

std::string fmt(double x) { return format_real(x); }
std::string fmt(long long x) { return std::to_string(x); }
std::string fmt(std::uint64_t x) { return std::to_string(x); }

void emit(const CsvTable &table, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        table.write(out);
    } else {
        write_file(path, table.str());
    }
}

std::vector<double> time_grid(double t_max, int points) {
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw UsageError("--t-max must be finite and >= 0");
    }
    if (points < 1) {
        throw UsageError("--points must be >= 1");
    }
    if (points == 1) {
        return {t_max};
    }
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = t_max * k / (points - 1);
    }
    return grid;
}

/// Runs `check` and reports library validation failures as usage errors.
template <typename F>
void validated(F &&check) {
    try {
        check();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range &e) {
        throw UsageError(e.what());
    }
}

template <typename Enum, std::size_t N>
Enum parse_choice(const std::string &flag, const std::string &value,
                  const std::pair<const char *, Enum> (&choices)[N]) {
    for (const auto &[name, e] : choices) {
        if (value == name) return e;
    }
    std::string allowed;
    for (const auto &[name, e] : choices) allowed += std::string(allowed.empty() ? "" : ", ") + name;
    throw UsageError("--" + flag + " must be one of: " + allowed);
}

constexpr std::pair<const char *, BackwardMode> kBackwardModes[] = {
    {"trotterized", BackwardMode::trotterized}, {"exact-continuous", BackwardMode::exact_continuous}};
constexpr std::pair<const char *, TransferEngine> kEngines[] = {
    {"exact", TransferEngine::exact},
    {"trotter-direct", TransferEngine::trotter_direct},
    {"trotter-simfm", TransferEngine::trotter_simfm}};
constexpr std::pair<const char *, MeanFieldSchedule> kSchedules[] = {
    {"continuous", MeanFieldSchedule::continuous},
    {"mirrored-pulse", MeanFieldSchedule::mirrored_pulse}};
constexpr std::pair<const char *, SignConvention> kConventions[] = {
    {"hamiltonian", SignConvention::hamiltonian}, {"literal", SignConvention::literal}};

struct Command {
    virtual ~Command() = default;
    virtual int execute(std::ostream &out, std::ostream &err) = 0;
    ConfigBinder binder;
    std::string config_path;
};

// ---------------------------------------------------------------- echo

struct EchoCommand : Command {
    int n = 10;
    double j = 1.0;
    double t_max = 3.0;
    int points = 60;
    int steps = 16;
    std::string backward = "trotterized";
    double v = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
    bool with_meanfield = false;
    std::string schedule = "continuous";
    std::string sign_convention = "hamiltonian";
    double dt = 1e-3;
    std::string meanfield_out;
    std::string svg;

    explicit EchoCommand(CLI::App &app) {
        binder.option(app, "n", n, "number of sites (>= 3)");
        binder.option(app, "j", j, "uniform coupling strength");
        binder.option(app, "t-max", t_max, "largest leg duration t");
        binder.option(app, "points", points, "number of t values in [0, t-max]");
        binder.option(app, "steps", steps, "Trotter steps per leg");
        binder.option(app, "backward", backward, "trotterized | exact-continuous");
        binder.option(app, "v", v, "relative gate-angle noise strength");
        binder.option(app, "seed", seed, "noise seed");
        binder.option(app, "out", out_path, "CSV path (default: stdout)");
        binder.flag(app, "with-meanfield", with_meanfield, "add the mean-field curve");
        binder.option(app, "schedule", schedule, "mean-field schedule: continuous | mirrored-pulse");
        binder.option(app, "sign-convention", sign_convention, "mean-field forward sign: hamiltonian | literal");
        binder.option(app, "dt", dt, "mean-field RK4 step");
        binder.option(app, "meanfield-out", meanfield_out, "separate mean-field CSV path");
        binder.option(app, "svg", svg, "SVG plot path");
    }

    int execute(std::ostream &out, std::ostream &) override {
        const std::vector<double> grid = time_grid(t_max, points);
        EchoConfig base;
        base.n = n;
        base.j = j;
        base.n_steps = steps;
        base.backward = parse_choice("backward", backward, kBackwardModes);
        base.noise.v = v;
        base.seed = seed;
        MeanFieldEchoConfig mf;
        mf.n = n;
        mf.j = j;
        mf.n_steps = steps;
        mf.schedule = parse_choice("schedule", schedule, kSchedules);
        mf.sign_convention = parse_choice("sign-convention", sign_convention, kConventions);
        mf.integrator.dt = dt;
        validated([&] {
            base.t = t_max;
            base.validate();
            if (!(dt > 0.0)) throw InvalidArgument("--dt must be positive");
        });

        CsvTable table({"n", "j", "t", "N", "mode", "v", "seed", "f_ec", "I_ec"});
        PlotSpec plot{"Echo fidelity, n = " + std::to_string(n), "t", "f_ec", false, false, {}};
        PlotSeries quantum{"quantum (" + backward + ")", {}, {}, color(0)};
        for (const CurvePoint &p : echo_fidelity_curve(base, grid)) {
            table.add_row({fmt(static_cast<long long>(n)), fmt(j), fmt(p.t),
                           fmt(static_cast<long long>(steps)), backward, fmt(v), fmt(seed),
                           fmt(p.fidelity), fmt(1.0 - p.fidelity)});
            quantum.x.push_back(p.t);
            quantum.y.push_back(p.fidelity);
        }
        plot.series.push_back(std::move(quantum));

        if (with_meanfield) {
            const std::string mode = "meanfield-" + schedule + "-" + sign_convention;
            const long long mf_steps = mf.schedule == MeanFieldSchedule::mirrored_pulse ? steps : 0;
            CsvTable mf_table({"n", "j", "t", "schedule", "sign_convention", "dt", "f_ec"});
            PlotSeries classical{"mean field (" + schedule + ", " + sign_convention + ")", {}, {}, color(1)};
            for (double t : grid) {
                mf.t = t;
                const double f = run_meanfield_echo(mf).fidelity;
                table.add_row({fmt(static_cast<long long>(n)), fmt(j), fmt(t), fmt(mf_steps), mode,
                               fmt(0.0), fmt(std::uint64_t{0}), fmt(f), fmt(1.0 - f)});
                mf_table.add_row({fmt(static_cast<long long>(n)), fmt(j), fmt(t), schedule,
                                  sign_convention, fmt(dt), fmt(f)});
                classical.x.push_back(t);
                classical.y.push_back(f);
            }
            plot.series.push_back(std::move(classical));
            if (!meanfield_out.empty()) {
                write_file(meanfield_out, mf_table.str());
            }
        }
        emit(table, out_path, out);
        if (!svg.empty()) {
            write_file(svg, render_svg(plot));
        }
        return kExitOk;
    }
};

// ------------------------------------------------------------ transfer

struct TransferCommand : Command {
    int n = 6;
    double t_max = kTransferTime;
    int points = 50;
    int steps = 0;
    std::string engine = "exact";
    double v = 0.0;
    std::uint64_t seed = 0;
    bool perturb_fields = false;
    std::string out_path;
    std::string svg;

    explicit TransferCommand(CLI::App &app) {
        binder.option(app, "n", n, "number of sites (>= 2)");
        binder.option(app, "t-max", t_max, "final time of the curve");
        binder.option(app, "points", points, "number of t values in [0, t-max]");
        binder.option(app, "steps", steps, "Trotter steps (0: calibrated)");
        binder.option(app, "engine", engine, "exact | trotter-direct | trotter-simfm");
        binder.option(app, "v", v, "relative gate-angle noise strength");
        binder.option(app, "seed", seed, "noise seed");
        binder.flag(app, "perturb-fields", perturb_fields, "also perturb field phases");
        binder.option(app, "out", out_path, "CSV path (default: stdout)");
        binder.option(app, "svg", svg, "SVG plot path");
    }

    int execute(std::ostream &out, std::ostream &) override {
        const std::vector<double> grid = time_grid(t_max, points);
        TransferConfig base;
        base.n = n;
        base.n_steps = steps;
        base.engine = parse_choice("engine", engine, kEngines);
        base.noise.v = v;
        base.noise.perturb_fields = perturb_fields;
        base.seed = seed;
        validated([&] {
            base.t = t_max;
            base.validate();
        });
        long long used = steps;
        if (base.engine == TransferEngine::exact) {
            used = 0;
        } else if (steps == 0) {
            used = calibrated_transfer_steps(n, base.engine);
        }

        CsvTable table({"n", "t", "N", "engine", "v", "seed", "f_tr", "I_tr"});
        PlotSeries series{engine, {}, {}, color(0)};
        for (const CurvePoint &p : transfer_fidelity_curve(base, grid)) {
            table.add_row({fmt(static_cast<long long>(n)), fmt(p.t), fmt(used), engine, fmt(v),
                           fmt(seed), fmt(p.fidelity), fmt(1.0 - p.fidelity)});
            series.x.push_back(p.t);
            series.y.push_back(p.fidelity);
        }
        emit(table, out_path, out);
        if (!svg.empty()) {
            write_file(svg, render_svg({"Transfer fidelity, n = " + std::to_string(n), "t", "f_tr",
                                        false, false, {std::move(series)}}));
        }
        return kExitOk;
    }
};

// ---------------------------------------------------------- robustness

std::vector<int> parse_range(const std::string &text) {
    const auto colon = text.find(':');
    int lo = 0, hi = 0;
    const char *end = text.data() + text.size();
    if (colon == std::string::npos ||
        std::from_chars(text.data(), text.data() + colon, lo).ptr != text.data() + colon ||
        std::from_chars(text.data() + colon + 1, end, hi).ptr != end || hi < lo) {
        throw UsageError("--n-range must look like a:b with a <= b");
    }
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

struct RobustnessCommand : Command {
    std::string protocol = "echo";
    int n = 10;
    std::string n_range;
    double v_min = 1e-3;
    double v_max = 1e-1;
    int v_points = 8;
    int trials = 100;
    std::uint64_t seed = 42;
    double t = std::numbers::pi / 2;
    int steps = -1;
    std::string engine = "trotter-simfm";
    bool perturb_fields = false;
    int threads = 0;
    std::string trials_out;
    std::string fits_out;
    std::string svg;
    std::string slope_svg;

    explicit RobustnessCommand(CLI::App &app) {
        binder.option(app, "protocol", protocol, "echo | transfer");
        binder.option(app, "n", n, "number of sites");
        binder.option(app, "n-range", n_range, "inclusive site range a:b (overrides --n)");
        binder.option(app, "v-min", v_min, "smallest noise strength");
        binder.option(app, "v-max", v_max, "largest noise strength");
        binder.option(app, "v-points", v_points, "log-spaced noise values (>= 3)");
        binder.option(app, "trials", trials, "noisy trials per (n, v)");
        binder.option(app, "seed", seed, "master seed");
        binder.option(app, "t", t, "protocol time (echo leg or transfer time)");
        binder.option(app, "steps", steps, "Trotter steps (echo default 4, transfer default calibrated)");
        binder.option(app, "engine", engine, "transfer engine: trotter-direct | trotter-simfm");
        binder.flag(app, "perturb-fields", perturb_fields, "also perturb field phases (transfer)");
        binder.option(app, "threads", threads, "worker threads (0: ECHOCHAIN_THREADS or hardware)");
        binder.option(app, "trials-out", trials_out, "raw trials CSV path");
        binder.option(app, "fits-out", fits_out, "fits CSV path (default: stdout)");
        binder.option(app, "svg", svg, "log-log SVG plot path");
        binder.option(app, "slope-svg", slope_svg, "b(n) SVG plot path");
    }

    int execute(std::ostream &out, std::ostream &err) override {
        if (trials < 1) throw UsageError("--trials must be >= 1");
        if (v_points < 3) throw UsageError("--v-points must be >= 3 for a fit");
        if (!(v_min > 0.0) || !(v_max >= v_min) || !std::isfinite(v_max)) {
            throw UsageError("need 0 < --v-min <= --v-max");
        }
        if (threads < 0) throw UsageError("--threads must be >= 0");
        const std::vector<int> ns = n_range.empty() ? std::vector<int>{n} : parse_range(n_range);
        const std::vector<double> grid = log_spaced(v_min, v_max, v_points);

        ProtocolTemplate base;
        if (protocol == "echo") {
            EchoConfig c;
            c.t = t;
            c.n_steps = steps < 0 ? 4 : steps;
            base = c;
        } else if (protocol == "transfer") {
            TransferConfig c;
            c.t = t;
            c.n_steps = steps < 0 ? 0 : steps;
            c.engine = parse_choice("engine", engine, kEngines);
            if (c.engine == TransferEngine::exact) {
                throw UsageError("robustness needs a Trotter engine");
            }
            c.noise.perturb_fields = perturb_fields;
            base = c;
        } else {
            throw UsageError("--protocol must be echo or transfer");
        }
        validated([&] {
            for (int size : ns) {
                std::visit([&](auto c) { c.n = size; c.noise.v = v_max; c.validate(); }, base);
            }
        });

        const int workers = threads > 0 ? threads : default_thread_count();
        const std::vector<SlopeEntry> entries = slope_vs_n(base, ns, grid, trials, seed, workers);

        CsvTable trial_table({"protocol", "n", "t", "N", "v", "trial", "seed", "infidelity"});
        for (const SlopeEntry &e : entries) {
            long long used = 0;
            if (const auto *ec = std::get_if<EchoConfig>(&base)) {
                used = ec->n_steps;
            } else {
                const auto &tc = std::get<TransferConfig>(base);
                used = tc.n_steps > 0 ? tc.n_steps : calibrated_transfer_steps(e.n, tc.engine);
            }
            for (const TrialStats &s : e.stats) {
                for (int k = 0; k < s.trials; ++k) {
                    trial_table.add_row({protocol, fmt(static_cast<long long>(e.n)), fmt(t), fmt(used),
                                         fmt(s.v), fmt(static_cast<long long>(k)), fmt(s.seeds[k]),
                                         fmt(s.infidelities[k])});
                }
            }
        }

        // Transfer fits are grouped even n first, then odd n.
        std::vector<SlopeEntry> ordered = entries;
        if (protocol == "transfer") {
            const ParitySplit split = split_by_parity(entries);
            ordered = split.even;
            ordered.insert(ordered.end(), split.odd.begin(), split.odd.end());
        }
        CsvTable fit_table({"protocol", "n", "a", "b", "r_squared", "points"});
        for (const SlopeEntry &e : ordered) {
            const std::string nan = "nan";
            fit_table.add_row({protocol, fmt(static_cast<long long>(e.n)), e.fit_ok ? fmt(e.fit.a) : nan,
                               e.fit_ok ? fmt(e.fit.b) : nan, e.fit_ok ? fmt(e.fit.r_squared) : nan,
                               fmt(static_cast<long long>(grid.size()))});
            err << protocol << " n=" << e.n;
            if (protocol == "transfer") err << (e.n % 2 == 0 ? " (even)" : " (odd)");
            if (e.fit_ok) {
                err << " b=" << fmt(e.fit.b) << " r2=" << fmt(e.fit.r_squared)
                    << (e.fit.reliable() ? "" : " [unreliable fit]") << '\n';
            } else {
                err << " fit unavailable (zero infidelity)\n";
            }
        }

        if (!trials_out.empty()) {
            write_file(trials_out, trial_table.str());
        }
        emit(fit_table, fits_out, out);
        if (!svg.empty()) write_file(svg, render_svg(loglog_plot(entries)));
        if (!slope_svg.empty()) write_file(slope_svg, render_svg(slope_plot(ordered)));
        return kExitOk;
    }

    PlotSpec loglog_plot(const std::vector<SlopeEntry> &entries) const {
        PlotSpec plot{protocol + " mean infidelity vs noise", "v", "mean infidelity", true, true, {}};
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const SlopeEntry &e = entries[k];
            PlotSeries pts{"n = " + std::to_string(e.n), {}, {}, color(k), false, true};
            for (const TrialStats &s : e.stats) {
                pts.x.push_back(s.v);
                pts.y.push_back(s.mean_infidelity);
            }
            plot.series.push_back(pts);
            if (e.fit_ok) {
                PlotSeries line{"", {pts.x.front(), pts.x.back()}, {}, color(k)};
                for (double x : line.x) line.y.push_back(std::exp(e.fit.a + e.fit.b * std::log(x)));
                plot.series.push_back(std::move(line));
            }
        }
        return plot;
    }

    PlotSpec slope_plot(const std::vector<SlopeEntry> &entries) const {
        PlotSpec plot{protocol + " slope b(n)", "n", "b", false, false, {}};
        PlotSeries even{"even n", {}, {}, color(0), false, true};
        PlotSeries odd{"odd n", {}, {}, color(1), false, true};
        for (const SlopeEntry &e : entries) {
            if (!e.fit_ok) continue;
            PlotSeries &s = (protocol == "transfer" && e.n % 2 != 0) ? odd : even;
            s.x.push_back(e.n);
            s.y.push_back(e.fit.b);
        }
        if (protocol != "transfer") even.label = "b(n)";
        plot.series.push_back(std::move(even));
        if (!odd.x.empty()) plot.series.push_back(std::move(odd));
        return plot;
    }
};

// -------------------------------------------------------- oracle-check

struct OracleCommand : Command {
    int max_n = 8;
    std::vector<int> trotter_steps{8, 16, 32};
    std::uint64_t seed = 1;
    std::string inject_fault;
    std::string out_path;

    explicit OracleCommand(CLI::App &app) {
        binder.option(app, "max-n", max_n, "largest chain in the scaling checks");
        binder.option(app, "trotter-steps", trotter_steps, "comma-separated step counts")->delimiter(',');
        binder.option(app, "seed", seed, "seed for random states");
        binder.option(app, "inject-fault", inject_fault, "harness self-test: theta-sign");
        binder.option(app, "out", out_path, "JSON report path (default: stdout)");
    }

    int execute(std::ostream &out, std::ostream &err) override {
        if (max_n < 3 || max_n > kOracleSiteLimit) {
            throw UsageError("--max-n must be in [3, " + std::to_string(kOracleSiteLimit) + "]");
        }
        if (trotter_steps.size() < 2 ||
            std::any_of(trotter_steps.begin(), trotter_steps.end(), [](int s) { return s < 1; })) {
            throw UsageError("--trotter-steps needs at least two positive counts");
        }
        if (!inject_fault.empty() && inject_fault != "theta-sign") {
            throw UsageError("--inject-fault must be theta-sign");
        }
        oracle::OracleCheckOptions opts;
        opts.max_n = max_n;
        opts.trotter_steps = trotter_steps;
        opts.seed = seed;
        opts.inject_fault = inject_fault;
        const auto results = oracle::run_oracle_checks(opts);
        const std::string report = oracle::to_json(results);
        if (out_path.empty()) {
            out << report << '\n';
        } else {
            write_file(out_path, report + "\n");
        }
        bool ok = true;
        for (const auto &r : results) {
            err << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
            ok = ok && r.passed;
        }
        return ok ? kExitOk : kExitFailure;
    }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact spin-chain simulations: Loschmidt echo, state transfer, noise sweeps"};
    app.name("echochain");
    app.require_subcommand(1);
    struct Entry {
        CLI::App *sub;
        std::unique_ptr<Command> cmd;
    };
    std::vector<Entry> entries;
    auto add = [&](const char *name, const char *help, auto make) {
        CLI::App *sub = app.add_subcommand(name, help);
        auto cmd = make(*sub);
        sub->add_option("--config", cmd->config_path, "JSON file with flag values");
        entries.push_back({sub, std::move(cmd)});
    };
    add("echo", "echo fidelity curve (optionally with the mean-field baseline)",
        [](CLI::App &s) { return std::make_unique<EchoCommand>(s); });
    add("transfer", "singlet transfer fidelity curve",
        [](CLI::App &s) { return std::make_unique<TransferCommand>(s); });
    add("robustness", "noisy trials, log-log fits and slope versus n",
        [](CLI::App &s) { return std::make_unique<RobustnessCommand>(s); });
    add("oracle-check", "invariant checks against dense reference computations",
        [](CLI::App &s) { return std::make_unique<OracleCommand>(s); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (Entry &e : entries) {
        if (!e.sub->parsed()) continue;
        try {
            if (!e.cmd->config_path.empty()) {
                e.cmd->binder.apply(load_config(e.cmd->config_path));
            }
            return e.cmd->execute(out, err);
        } catch (const UsageError &ex) {
            err << "usage error: " << ex.what() << '\n';
            return kExitUsage;
        } catch (const std::exception &ex) {
            err << "error: " << ex.what() << '\n';
            return kExitFailure;
        }
    }
    return kExitUsage;
}

} // namespace echochain::cli
