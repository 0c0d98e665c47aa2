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

#include "echochain/noise.hpp"

#include <cmath>

#include "echochain/errors.hpp"

namespace echochain {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

double sample_eta(Rng &rng, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InvalidArgument("noise strength v must be finite and >= 0");
    }
    if (v == 0.0) {
        return 0.0;
    }
    std::normal_distribution<double> dist(0.0, v);
    return dist(rng);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

} // namespace echochain
