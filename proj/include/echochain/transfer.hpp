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

#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "echochain/chain.hpp"
#include "echochain/echo.hpp"
#include "echochain/noise.hpp"

namespace echochain {

enum class TransferEngine { exact, trotter_direct, trotter_simfm };

inline constexpr double kTransferTime = std::numbers::pi / 2;

/// Trotter error budget used when the step count is chosen automatically.
inline constexpr double kTransferTrotterBudget = 1e-4;

struct TransferConfig {
    int n = 6;
    double t = kTransferTime;
    /// Zero selects calibrated_transfer_steps(n, engine).
    int n_steps = 0;
    TransferEngine engine = TransferEngine::exact;
    NoiseModel noise;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TransferResult {
    double fidelity = 0.0;
    double infidelity = 0.0;
    int steps_used = 0;
    TransferConfig config;
    ConservationDrift drift;
};

/// Evolves the head singlet under the engineered chain and returns the
/// singlet weight of sites (n-1, n).
TransferResult run_transfer(const TransferConfig &config,
                            const ExactPropagator *oracle = nullptr);

std::vector<CurvePoint> transfer_fidelity_curve(const TransferConfig &config,
                                                std::span<const double> t_grid);

/**
 * Smallest power-of-two step count whose noise-free Trotter infidelity at
 * t = pi/2 is below kTransferTrotterBudget (the exact transfer reaches unit
 * fidelity). Results are memoized per (n, engine).
 */
int calibrated_transfer_steps(int n, TransferEngine engine);

std::string to_string(TransferEngine engine);

} // namespace echochain
