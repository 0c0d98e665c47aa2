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

#include "echochain/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "echochain/errors.hpp"
#include "echochain/trotter.hpp"

namespace echochain {
namespace {

constexpr cplx kI{0.0, 1.0};

/// Signed coupling of bond (i, i+1) stored at index i-1.
using Couplings = std::vector<double>;

Vec3 add_scaled(Vec3 acc, double s, const Vec3 &v) {
    for (int k = 0; k < 3; ++k) {
        acc[k] += s * v[k];
    }
    return acc;
}

double length(const Vec3 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

std::vector<Vec3> fields_from(const MeanFieldState &state, const Couplings &j) {
    const int n = state.num_sites();
    std::vector<Vec3> spin(n + 1, Vec3{0, 0, 0}); // 1-based, site 1 unused
    spin[2] = pair_second_spin_expectation(state.pair);
    for (int site = 3; site <= n; ++site) {
        spin[site] = spin_expectation(state.spins[site - 3]);
    }
    std::vector<Vec3> h(n - 1, Vec3{0, 0, 0});
    for (int site = 2; site <= n; ++site) {
        Vec3 acc{0, 0, 0};
        if (site >= 3) {
            acc = add_scaled(acc, j[site - 2], spin[site - 1]);
        }
        if (site <= n - 1) {
            acc = add_scaled(acc, j[site - 1], spin[site + 1]);
        }
        h[site - 2] = acc;
    }
    return h;
}

// (h . S) with S = sigma / 2, on (up, down).
std::array<cplx, 4> field_matrix(const Vec3 &h) {
    return {cplx{0.5 * h[2], 0.0}, cplx{0.5 * h[0], -0.5 * h[1]},
            cplx{0.5 * h[0], 0.5 * h[1]}, cplx{-0.5 * h[2], 0.0}};
}

// Flattened layout: 4 pair amplitudes, then 2 per spin.
std::vector<cplx> flatten(const MeanFieldState &s) {
    std::vector<cplx> y(4 + 2 * s.spins.size());
    std::copy(s.pair.begin(), s.pair.end(), y.begin());
    for (std::size_t k = 0; k < s.spins.size(); ++k) {
        y[4 + 2 * k] = s.spins[k][0];
        y[5 + 2 * k] = s.spins[k][1];
    }
    return y;
}

MeanFieldState unflatten(const std::vector<cplx> &y, double time) {
    MeanFieldState s;
    std::copy(y.begin(), y.begin() + 4, s.pair.begin());
    s.spins.resize((y.size() - 4) / 2);
    for (std::size_t k = 0; k < s.spins.size(); ++k) {
        s.spins[k] = {y[4 + 2 * k], y[5 + 2 * k]};
    }
    s.time = time;
    return s;
}

std::vector<cplx> derivative(const std::vector<cplx> &y, const Couplings &j) {
    const MeanFieldState s = unflatten(y, 0.0);
    const std::vector<Vec3> h = fields_from(s, j);
    std::vector<cplx> dy(y.size());
    // Pair: h_2 . S acts on the second site (low bit of the pair index).
    const auto m2 = field_matrix(h[0]);
    for (int b1 = 0; b1 < 2; ++b1) {
        const cplx up = y[2 * b1], down = y[2 * b1 + 1];
        dy[2 * b1] = -kI * (m2[0] * up + m2[1] * down);
        dy[2 * b1 + 1] = -kI * (m2[2] * up + m2[3] * down);
    }
    for (std::size_t k = 0; k < s.spins.size(); ++k) {
        const auto m = field_matrix(h[k + 1]);
        const cplx up = y[4 + 2 * k], down = y[5 + 2 * k];
        dy[4 + 2 * k] = -kI * (m[0] * up + m[1] * down);
        dy[5 + 2 * k] = -kI * (m[2] * up + m[3] * down);
    }
    return dy;
}

void renormalize(MeanFieldState &s) {
    double pn = 0.0;
    for (const cplx &a : s.pair) {
        pn += std::norm(a);
    }
    pn = std::sqrt(pn);
    for (cplx &a : s.pair) {
        a /= pn;
    }
    for (SpinState &sp : s.spins) {
        const double sn = std::sqrt(std::norm(sp[0]) + std::norm(sp[1]));
        sp[0] /= sn;
        sp[1] /= sn;
    }
}

MeanFieldState step(const MeanFieldState &state, const Couplings &j, double dt) {
    const std::vector<cplx> y = flatten(state);
    auto axpy = [](const std::vector<cplx> &base, double s, const std::vector<cplx> &d) {
        std::vector<cplx> out(base.size());
        for (std::size_t k = 0; k < base.size(); ++k) {
            out[k] = base[k] + s * d[k];
        }
        return out;
    };
    const auto k1 = derivative(y, j);
    const auto k2 = derivative(axpy(y, dt / 2, k1), j);
    const auto k3 = derivative(axpy(y, dt / 2, k2), j);
    const auto k4 = derivative(axpy(y, dt, k3), j);
    std::vector<cplx> next(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        next[k] = y[k] + (dt / 6.0) * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
    MeanFieldState out = unflatten(next, state.time + dt);
    renormalize(out);
    return out;
}

Couplings signed_couplings(const ChainSpec &spec, double sign) {
    Couplings j(spec.couplings.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        j[k] = sign * spec.exchange_prefactor * spec.couplings[k];
    }
    return j;
}

struct Tracker {
    MeanFieldResult *result;

    void observe(const MeanFieldState &s) const {
        for (const SpinState &sp : s.spins) {
            result->max_bloch_deviation = std::max(
                result->max_bloch_deviation, std::abs(length(spin_expectation(sp)) - 0.5));
            result->max_norm_deviation = std::max(
                result->max_norm_deviation,
                std::abs(std::sqrt(std::norm(sp[0]) + std::norm(sp[1])) - 1.0));
        }
        result->max_second_spin =
            std::max(result->max_second_spin, length(pair_second_spin_expectation(s.pair)));
    }
};

/// Integrates for `duration` with fixed couplings; the last step is shortened
/// so the segment ends exactly.
MeanFieldState integrate(MeanFieldState state, const Couplings &j, double duration,
                         double dt, const Tracker &tracker) {
    if (duration <= 0.0) {
        return state;
    }
    const auto steps = static_cast<long>(std::ceil(duration / dt - 1e-9));
    const double h = duration / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
        state = step(state, j, h);
        tracker.observe(state);
    }
    return state;
}

/// Drives the mean-field equations with the pulse train of `plan`: within an
/// exchange layer each bond is on for its own pulse duration.
MeanFieldState drive_with_plan(MeanFieldState state, const TrotterPlan &plan, int n,
                               double dt, const Tracker &tracker) {
    for (const Layer &layer : plan.layers) {
        const auto *ex = std::get_if<ExchangeLayer>(&layer);
        if (ex == nullptr || ex->ops.empty()) {
            continue;
        }
        std::vector<double> ends;
        for (const ExchangeOp &op : ex->ops) {
            ends.push_back(op.duration);
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        double elapsed = 0.0;
        for (double end : ends) {
            Couplings j(n - 1, 0.0);
            for (const ExchangeOp &op : ex->ops) {
                if (op.duration >= end) {
                    j[op.bond.first - 1] = op.coupling;
                }
            }
            state = integrate(std::move(state), j, end - elapsed, dt, tracker);
            elapsed = end;
        }
    }
    return state;
}

} // namespace

MeanFieldState initial_meanfield_state(int n) {
    if (n < 3) {
        throw InvalidArgument("mean-field echo needs n >= 3");
    }
    MeanFieldState s;
    s.pair = pair_states::singlet();
    s.spins.assign(n - 2, SpinState{cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    return s;
}

Vec3 spin_expectation(const SpinState &spin) {
    const cplx cross = std::conj(spin[0]) * spin[1];
    return {cross.real(), cross.imag(),
            0.5 * (std::norm(spin[0]) - std::norm(spin[1]))};
}

Vec3 pair_second_spin_expectation(const PairState &pair) {
    // Reduced density matrix of site 2 summed over site 1.
    cplx rho_ud{0.0, 0.0};
    double rho_uu = 0.0, rho_dd = 0.0;
    for (int b1 = 0; b1 < 2; ++b1) {
        const cplx up = pair[2 * b1], down = pair[2 * b1 + 1];
        rho_uu += std::norm(up);
        rho_dd += std::norm(down);
        rho_ud += up * std::conj(down);
    }
    // <S_x> = Re(rho_du), <S_y> = Im(rho_du), rho_du = conj(rho_ud).
    return {rho_ud.real(), -rho_ud.imag(), 0.5 * (rho_uu - rho_dd)};
}

std::vector<Vec3> mean_fields(const MeanFieldState &state, const ChainSpec &spec,
                              double sign) {
    spec.validate();
    if (spec.n != state.num_sites()) {
        throw InvalidArgument("chain and mean-field state have different sizes");
    }
    return fields_from(state, signed_couplings(spec, sign));
}

MeanFieldState rk4_step(const MeanFieldState &state, const ChainSpec &spec,
                        double sign, double dt) {
    spec.validate();
    if (spec.n != state.num_sites()) {
        throw InvalidArgument("chain and mean-field state have different sizes");
    }
    if (!(dt > 0.0)) {
        throw InvalidArgument("RK4 step must be positive");
    }
    return step(state, signed_couplings(spec, sign), dt);
}

MeanFieldResult run_meanfield_echo(const MeanFieldEchoConfig &config) {
    if (!(config.integrator.dt > 0.0)) {
        throw InvalidArgument("integrator dt must be positive");
    }
    if (!(config.t >= 0.0) || !std::isfinite(config.t)) {
        throw InvalidArgument("echo time must be finite and >= 0");
    }
    const ChainSpec chain = uniform_echo_chain(config.n, config.j);
    MeanFieldResult result;
    const Tracker tracker{&result};
    MeanFieldState state = initial_meanfield_state(config.n);
    tracker.observe(state);
    const double dt = config.integrator.dt;

    if (config.schedule == MeanFieldSchedule::continuous) {
        const double forward_sign =
            config.sign_convention == SignConvention::hamiltonian ? -1.0 : 1.0;
        state = integrate(std::move(state), signed_couplings(chain, forward_sign),
                          config.t, dt, tracker);
        state = integrate(std::move(state), signed_couplings(chain, 1.0), config.t, dt,
                          tracker);
    } else {
        const TrotterPlan forward = second_order_plan(
            chain, config.t, config.n_steps, TrotterMode::simulated_ferromagnet);
        const TrotterPlan backward =
            second_order_plan(chain.with_sign(ExchangeSign::antiferromagnetic), config.t,
                              config.n_steps, TrotterMode::direct);
        state = drive_with_plan(std::move(state), forward, config.n, dt, tracker);
        state = drive_with_plan(std::move(state), backward, config.n, dt, tracker);
    }

    const PairState singlet = pair_states::singlet();
    cplx overlap{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        overlap += std::conj(singlet[k]) * state.pair[k];
    }
    result.fidelity = std::norm(overlap);
    result.infidelity = 1.0 - result.fidelity;
    result.final_state = std::move(state);
    return result;
}

std::string to_string(MeanFieldSchedule schedule) {
    return schedule == MeanFieldSchedule::continuous ? "continuous" : "mirrored-pulse";
}

std::string to_string(SignConvention convention) {
    return convention == SignConvention::hamiltonian ? "hamiltonian" : "literal";
}

} // namespace echochain
