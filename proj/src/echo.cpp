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

#include "echochain/echo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "echochain/errors.hpp"
#include "echochain/trotter.hpp"

namespace echochain {

void EchoConfig::validate() const {
    if (n < 3) {
        throw InvalidArgument("echo needs n >= 3");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("echo time must be finite and >= 0");
    }
    if (n_steps < 1) {
        throw InvalidArgument("echo needs at least one Trotter step");
    }
    if (!(j > 0.0)) {
        throw InvalidArgument("echo coupling must be positive");
    }
    if (!(noise.v >= 0.0)) {
        throw InvalidArgument("noise strength must be >= 0");
    }
}

void ConservationDrift::absorb(const ConservationDrift &other) {
    norm = std::max(norm, other.norm);
    total_sz = std::max(total_sz, other.total_sz);
}

EchoResult run_echo(const EchoConfig &config, const ExactPropagator *backward_oracle) {
    config.validate();
    const ChainSpec forward_chain = uniform_echo_chain(config.n, config.j);
    const ChainSpec backward_chain = forward_chain.with_sign(ExchangeSign::antiferromagnetic);

    Rng rng(config.seed);
    const NoiseModel *noise = config.noise.active() ? &config.noise : nullptr;

    StateVector state = prepare_singlet_head(config.n);
    const double sz0 = state.total_sz();
    ConservationDrift drift;
    auto checkpoint = [&](const StateVector &s) {
        drift.absorb({std::abs(s.norm() - 1.0), std::abs(s.total_sz() - sz0)});
    };

    const TrotterPlan forward = second_order_plan(
        forward_chain, config.t, config.n_steps, TrotterMode::simulated_ferromagnet);
    state = execute_plan(forward, std::move(state), noise, &rng);
    checkpoint(state);

    if (config.backward == BackwardMode::trotterized) {
        const TrotterPlan backward = second_order_plan(
            backward_chain, config.t, config.n_steps, TrotterMode::direct);
        state = execute_plan(backward, std::move(state), noise, &rng);
    } else {
        std::optional<ExactPropagator> local;
        if (backward_oracle == nullptr) {
            local.emplace(backward_chain);
            backward_oracle = &*local;
        }
        state = backward_oracle->evolve(state, config.t);
    }
    checkpoint(state);

    EchoResult result;
    result.fidelity = state.pair_projection_fidelity(1, 2, pair_states::singlet());
    result.infidelity = 1.0 - result.fidelity;
    result.elapsed = 2.0 * config.t;
    result.config = config;
    result.drift = drift;
    return result;
}

std::vector<CurvePoint> echo_fidelity_curve(const EchoConfig &config,
                                            std::span<const double> t_grid) {
    config.validate();
    std::optional<ExactPropagator> oracle;
    if (config.backward == BackwardMode::exact_continuous) {
        oracle.emplace(uniform_echo_chain(config.n, config.j)
                           .with_sign(ExchangeSign::antiferromagnetic));
    }
    std::vector<CurvePoint> curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
        EchoConfig point = config;
        point.t = t;
        const EchoResult r = run_echo(point, oracle ? &*oracle : nullptr);
        curve.push_back({t, r.fidelity});
    }
    return curve;
}

std::string to_string(BackwardMode mode) {
    return mode == BackwardMode::trotterized ? "trotterized" : "exact-continuous";
}

} // namespace echochain
