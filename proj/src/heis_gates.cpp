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

#include "echochain/heis_gates.hpp"

#include <cmath>
#include <string>

#include "echochain/errors.hpp"

namespace echochain {

Matrix4 exchange_unitary(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("exchange angle must be finite");
    }
    const cplx prefactor = std::polar(1.0, theta / 4.0);
    const cplx diag = prefactor * std::cos(theta / 2.0);
    const cplx swap = prefactor * cplx{0.0, -std::sin(theta / 2.0)};
    Matrix4 u{};
    // |00> and |11> are triplets: diag + swap = e^{-i theta/4}.
    u[0] = diag + swap;
    u[15] = diag + swap;
    u[5] = diag;
    u[10] = diag;
    u[6] = swap;
    u[9] = swap;
    return u;
}

double wrap_period(double j_fm) {
    return 2.0 * std::numbers::pi / (j_fm * std::abs(SpectralConstants::delta_eps));
}

double afm_duration_for_fm(double t, double j_afm, double j_fm) {
    if (!(j_afm > 0.0) || !(j_fm > 0.0)) {
        throw InvalidArgument("coupling strengths must be positive");
    }
    const double period = wrap_period(j_fm);
    if (!(t >= 0.0) || t > period) {
        throw OutOfRange("duration " + std::to_string(t) +
                         " outside one wrap period [0, " +
                         std::to_string(period) + "]");
    }
    return (j_fm / j_afm) * (period - t);
}

ReducedDuration reduce_to_period(double t, double j_fm) {
    if (!(j_fm > 0.0)) {
        throw InvalidArgument("coupling strength must be positive");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("duration must be finite and nonnegative");
    }
    const double period = wrap_period(j_fm);
    const double wraps = std::floor(t / period);
    double remainder = t - wraps * period;
    if (remainder < 0.0) {
        remainder = 0.0;
    }
    return {remainder, static_cast<long>(wraps)};
}

} // namespace echochain
