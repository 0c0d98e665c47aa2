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
#include <vector>

#include "echochain/chain.hpp"
#include "echochain/noise.hpp"

namespace echochain {

enum class BackwardMode {
    trotterized,      ///< same symmetric split as the forward leg
    exact_continuous, ///< exp(+i H_f t) from the dense oracle
};

struct EchoConfig {
    int n = 10;
    double j = 1.0;
    double t = 0.0; ///< duration of each leg
    int n_steps = 16;
    BackwardMode backward = BackwardMode::trotterized;
    NoiseModel noise;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Largest drift of the norm and of total S^z seen at the protocol
/// checkpoints (after each leg).
struct ConservationDrift {
    double norm = 0.0;
    double total_sz = 0.0;

    void absorb(const ConservationDrift &other);
};

struct EchoResult {
    double fidelity = 0.0;
    double infidelity = 0.0;
    double elapsed = 0.0; ///< total simulated time 2t
    EchoConfig config;
    ConservationDrift drift;
};

/**
 * Loschmidt echo on the uniform chain with bond (1,2) switched off.
 *
 * Starts from the singlet on sites 1-2 with all other spins up, runs the
 * simulated ferromagnet forward for t, then the antiferromagnet for t, and
 * returns the singlet weight of sites 1-2. `backward_oracle`, if given, must
 * be the propagator of the antiferromagnetic echo chain and is reused for
 * exact-continuous runs.
 */
EchoResult run_echo(const EchoConfig &config,
                    const ExactPropagator *backward_oracle = nullptr);

struct CurvePoint {
    double t;
    double fidelity;
};

std::vector<CurvePoint> echo_fidelity_curve(const EchoConfig &config,
                                            std::span<const double> t_grid);

std::string to_string(BackwardMode mode);

} // namespace echochain
