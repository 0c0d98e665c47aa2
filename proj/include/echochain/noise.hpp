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
#include <random>

namespace echochain {

using Rng = std::mt19937_64;

/// Multiplicative Gaussian gate error: each gate angle theta becomes
/// theta * (1 + eta) with eta ~ Normal(0, v^2), drawn fresh per gate.
struct NoiseModel {
    double v = 0.0;
    /// Also perturb single-site field phases (off: only exchange couplings
    /// carry errors).
    bool perturb_fields = false;

    bool active() const { return v > 0.0; }
};

/// Throws InvalidArgument for negative v. v == 0 returns 0 without drawing.
double sample_eta(Rng &rng, double v);

/// Seed of trial `trial` under `master_seed`: a splitmix64 hash of the pair,
/// so streams do not depend on execution order.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

} // namespace echochain
