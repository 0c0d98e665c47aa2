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

#include "echochain/transfer.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "echochain/errors.hpp"
#include "echochain/trotter.hpp"

namespace echochain {

void TransferConfig::validate() const {
    if (n < 2) {
        throw InvalidArgument("transfer needs n >= 2");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("transfer time must be finite and >= 0");
    }
    if (n_steps < 0) {
        throw InvalidArgument("step count must be >= 0 (0 = calibrated)");
    }
    if (!(noise.v >= 0.0)) {
        throw InvalidArgument("noise strength must be >= 0");
    }
    if (engine == TransferEngine::exact && noise.active()) {
        throw InvalidArgument("the exact engine has no gates to perturb");
    }
}

namespace {

TransferResult run_with_steps(const TransferConfig &config, int steps,
                              const ExactPropagator *oracle) {
    const ChainSpec chain = transfer_chain(config.n);
    StateVector state = prepare_singlet_head(config.n);
    const double sz0 = state.total_sz();

    if (config.engine == TransferEngine::exact) {
        std::optional<ExactPropagator> local;
        if (oracle == nullptr) {
            local.emplace(chain);
            oracle = &*local;
        }
        state = oracle->evolve(state, config.t);
        steps = 0;
    } else {
        const TrotterMode mode = config.engine == TransferEngine::trotter_direct
                                     ? TrotterMode::direct
                                     : TrotterMode::simulated_ferromagnet;
        const TrotterPlan plan = three_term_plan(chain, config.t, steps, mode);
        Rng rng(config.seed);
        const NoiseModel *noise = config.noise.active() ? &config.noise : nullptr;
        state = execute_plan(plan, std::move(state), noise, &rng);
    }

    TransferResult result;
    result.fidelity =
        state.pair_projection_fidelity(config.n - 1, config.n, pair_states::singlet());
    result.infidelity = 1.0 - result.fidelity;
    result.steps_used = steps;
    result.config = config;
    result.drift = {std::abs(state.norm() - 1.0), std::abs(state.total_sz() - sz0)};
    return result;
}

} // namespace

TransferResult run_transfer(const TransferConfig &config, const ExactPropagator *oracle) {
    config.validate();
    int steps = config.n_steps;
    if (steps == 0 && config.engine != TransferEngine::exact) {
        steps = calibrated_transfer_steps(config.n, config.engine);
    }
    return run_with_steps(config, steps, oracle);
}

std::vector<CurvePoint> transfer_fidelity_curve(const TransferConfig &config,
                                                std::span<const double> t_grid) {
    config.validate();
    std::optional<ExactPropagator> oracle;
    if (config.engine == TransferEngine::exact) {
        oracle.emplace(transfer_chain(config.n));
    }
    std::vector<CurvePoint> curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
        TransferConfig point = config;
        point.t = t;
        curve.push_back({t, run_transfer(point, oracle ? &*oracle : nullptr).fidelity});
    }
    return curve;
}

int calibrated_transfer_steps(int n, TransferEngine engine) {
    if (engine == TransferEngine::exact) {
        return 0;
    }
    static std::mutex mutex;
    static std::map<std::pair<int, TransferEngine>, int> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, engine}); it != cache.end()) {
            return it->second;
        }
    }
    TransferConfig probe;
    probe.n = n;
    probe.engine = engine;
    int chosen = 0;
    for (int steps = 1; steps <= (1 << 16); steps *= 2) {
        try {
            if (run_with_steps(probe, steps, nullptr).infidelity < kTransferTrotterBudget) {
                chosen = steps;
                break;
            }
        } catch (const OutOfRange &) {
            // Sub-steps longer than one wrap period; refine further.
        }
    }
    if (chosen == 0) {
        throw std::runtime_error("could not calibrate a transfer step count");
    }
    std::lock_guard lock(mutex);
    cache[{n, engine}] = chosen;
    return chosen;
}

std::string to_string(TransferEngine engine) {
    switch (engine) {
    case TransferEngine::exact:
        return "exact";
    case TransferEngine::trotter_direct:
        return "trotter-direct";
    case TransferEngine::trotter_simfm:
        return "trotter-simfm";
    }
    return "unknown";
}

} // namespace echochain
