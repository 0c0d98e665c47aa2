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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "echochain/echo.hpp"
#include "echochain/transfer.hpp"

namespace echochain {

/// Protocol run repeatedly under noise; its noise and seed fields are
/// overwritten per trial.
using ProtocolTemplate = std::variant<EchoConfig, TransferConfig>;

std::string protocol_name(const ProtocolTemplate &protocol);
int protocol_sites(const ProtocolTemplate &protocol);
ProtocolTemplate with_sites(ProtocolTemplate protocol, int n);

struct TrialStats {
    double v = 0.0;
    int n = 0;
    std::string protocol;
    int trials = 0;
    double mean_infidelity = 0.0;
    double std_infidelity = 0.0; ///< sample standard deviation
    std::vector<double> infidelities;
    std::vector<std::uint64_t> seeds;
    ConservationDrift drift; ///< worst case over trials
};

/**
 * Runs `trials` noisy copies of the protocol. Trial k uses
 * trial_seed(master_seed, k), so the outcome does not depend on the thread
 * count or scheduling; aggregation folds in trial order.
 */
TrialStats run_trials(const ProtocolTemplate &protocol, double v, int trials,
                      std::uint64_t master_seed, int threads = 0);

struct FitPoint {
    double v;
    double infidelity;
};

struct FitResult {
    double a = 0.0; ///< intercept of log I against log v
    double b = 0.0; ///< slope
    double r_squared = 0.0;
    std::vector<double> residuals;

    /// Minimum r^2 for the slope to count as a robustness exponent.
    static constexpr double kReliableRSquared = 0.95;
    bool reliable() const { return r_squared >= kReliableRSquared; }
};

/// Ordinary least squares of log I = a + b log v. Needs >= 3 points with
/// v > 0 and I > 0 (InvalidArgument otherwise).
FitResult loglog_fit(std::span<const FitPoint> points);

/// `points` values spaced evenly in log between lo and hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int points);

struct SlopeEntry {
    int n = 0;
    FitResult fit;
    bool fit_ok = false; ///< false when a point had zero infidelity
    std::vector<TrialStats> stats;
};

/// Master seed for the (n, v-index) cell of a sweep.
std::uint64_t sweep_seed(std::uint64_t master_seed, int n, std::size_t v_index);

std::vector<SlopeEntry> slope_vs_n(const ProtocolTemplate &protocol,
                                   std::span<const int> n_values,
                                   std::span<const double> v_grid, int trials,
                                   std::uint64_t master_seed, int threads = 0);

struct ParitySplit {
    std::vector<SlopeEntry> even;
    std::vector<SlopeEntry> odd;
};

ParitySplit split_by_parity(const std::vector<SlopeEntry> &entries);

} // namespace echochain
