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

#include <numbers>

#include "echochain/statevec.hpp"

namespace echochain {

/// Two-spin exchange energies (hbar = 1).
struct SpectralConstants {
    static constexpr double eps_singlet = -0.75;
    static constexpr double eps_triplet = 0.25;
    static constexpr double delta_eps = eps_singlet - eps_triplet;
};

/**
 * exp(-i theta S_1.S_2) in basis order 00, 01, 10, 11.
 *
 * Uses S_1.S_2 = SWAP/2 - 1/4, so the result is
 * e^{i theta/4} [cos(theta/2) I - i sin(theta/2) SWAP]. The singlet picks up
 * e^{+3i theta/4} and every triplet e^{-i theta/4}.
 */
Matrix4 exchange_unitary(double theta);

/// Period of the ferromagnetic two-spin evolution, 2 pi / (j_fm |delta_eps|).
double wrap_period(double j_fm);

/**
 * Antiferromagnetic pulse duration that reproduces ferromagnetic evolution
 * of duration t (strength j_fm) up to a global phase, taking the branch
 * with the shortest pulse:
 *
 *   t' = (j_fm / j_afm) * (wrap_period(j_fm) - t).
 *
 * t must lie in [0, wrap_period(j_fm)]; throws OutOfRange otherwise.
 */
double afm_duration_for_fm(double t, double j_afm, double j_fm);

struct ReducedDuration {
    double remainder; ///< in [0, period)
    long wraps;
};

/// Splits t into whole wrap periods plus a remainder inside one period.
ReducedDuration reduce_to_period(double t, double j_fm);

/// Phase consumed by apply_single_site_phase for a field b held for tau.
inline double field_phase(double b, double tau) { return b * tau; }

} // namespace echochain
