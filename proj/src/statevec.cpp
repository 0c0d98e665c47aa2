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

#include "echochain/statevec.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "echochain/errors.hpp"
#include "echochain/kernels.hpp"

namespace echochain {
namespace {

constexpr int kMaxSites = 30;

void check_num_sites(int n) {
    if (n < 2 || n > kMaxSites) {
        throw InvalidArgument("site count must be in [2, " +
                              std::to_string(kMaxSites) + "], got " +
                              std::to_string(n));
    }
}

} // namespace

TwoSiteGate::TwoSiteGate(const Matrix4 &matrix) : matrix_(matrix) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                acc += matrix[4 * r + k] * std::conj(matrix[4 * c + k]);
            }
            const cplx expected = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (!(std::abs(acc - expected) <= kUnitarityTol)) {
                throw InvalidGate("two-site matrix is not unitary (entry " +
                                  std::to_string(r) + "," + std::to_string(c) +
                                  " of U U^dagger deviates by " +
                                  std::to_string(std::abs(acc - expected)) + ")");
            }
        }
    }
}

StateVector::StateVector(int num_sites, std::vector<cplx> amplitudes)
    : num_sites_(num_sites), amps_(std::move(amplitudes)) {
    check_num_sites(num_sites);
    if (amps_.size() != (std::size_t{1} << num_sites)) {
        throw InvalidArgument("amplitude array length must be 2^n");
    }
    if (!(std::abs(norm() - 1.0) <= kNormTol)) {
        throw InvalidArgument("state is not normalized");
    }
}

void StateVector::check_site(int site) const {
    if (site < 1 || site > num_sites_) {
        throw InvalidArgument("site " + std::to_string(site) +
                              " out of range [1, " + std::to_string(num_sites_) +
                              "]");
    }
}

void StateVector::apply_two_site(int site_i, int site_j, const TwoSiteGate &gate) {
    check_site(site_i);
    check_site(site_j);
    if (site_i == site_j) {
        throw InvalidArgument("two-site gate needs distinct sites");
    }
    kernels::active_kernels().apply_4x4(amps_.data(), amps_.size(),
                                        bit_of(site_i), bit_of(site_j),
                                        gate.matrix().data());
}

void StateVector::apply_single_site_phase(int site, double phi) {
    check_site(site);
    const cplx down_phase = std::polar(1.0, phi);
    const cplx up_phase = std::conj(down_phase);
    kernels::active_kernels().apply_diag(amps_.data(), amps_.size(),
                                         bit_of(site), up_phase, down_phase);
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const cplx &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

cplx StateVector::inner(const StateVector &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw InvalidArgument("inner product of states with different sizes");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        acc += std::conj(amps_[k]) * other.amps_[k];
    }
    return acc;
}

double StateVector::total_sz() const {
    double acc = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        const int down = std::popcount(k);
        acc += std::norm(amps_[k]) * 0.5 * (num_sites_ - 2 * down);
    }
    return acc;
}

double StateVector::pair_projection_fidelity(int site_i, int site_j,
                                             const PairState &target) const {
    check_site(site_i);
    check_site(site_j);
    if (site_i == site_j) {
        throw InvalidArgument("pair projection needs distinct sites");
    }
    const std::size_t mi = std::size_t{1} << bit_of(site_i);
    const std::size_t mj = std::size_t{1} << bit_of(site_j);
    // Sum over the environment configurations of |<target|psi_env>|^2.
    double fidelity = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & (mi | mj)) != 0) {
            continue;
        }
        const cplx overlap = std::conj(target[0]) * amps_[k] +
                             std::conj(target[1]) * amps_[k | mj] +
                             std::conj(target[2]) * amps_[k | mi] +
                             std::conj(target[3]) * amps_[k | mi | mj];
        fidelity += std::norm(overlap);
    }
    return fidelity;
}

StateVector basis_state(int num_sites, std::span<const int> bits) {
    check_num_sites(num_sites);
    if (bits.size() != static_cast<std::size_t>(num_sites)) {
        throw InvalidArgument("bit list length must equal the site count");
    }
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw InvalidArgument("bits must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    std::vector<cplx> amps(std::size_t{1} << num_sites);
    amps[index] = 1.0;
    return StateVector(num_sites, std::move(amps));
}

StateVector prepare_singlet_head(int num_sites) {
    check_num_sites(num_sites);
    std::vector<cplx> amps(std::size_t{1} << num_sites);
    const double h = 1.0 / std::sqrt(2.0);
    amps[std::size_t{1} << (num_sites - 2)] = h;  // |01 0...0>
    amps[std::size_t{1} << (num_sites - 1)] = -h; // |10 0...0>
    return StateVector(num_sites, std::move(amps));
}

StateVector apply_two_site(StateVector state, int site_i, int site_j,
                           const Matrix4 &u) {
    state.apply_two_site(site_i, site_j, TwoSiteGate(u));
    return state;
}

StateVector apply_single_site_phase(StateVector state, int site, double phi) {
    state.apply_single_site_phase(site, phi);
    return state;
}

namespace pair_states {

PairState singlet() {
    const double h = 1.0 / std::sqrt(2.0);
    return {0.0, h, -h, 0.0};
}

PairState triplet(int m) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (m) {
    case 1:
        return {1.0, 0.0, 0.0, 0.0};
    case 0:
        return {0.0, h, h, 0.0};
    case -1:
        return {0.0, 0.0, 0.0, 1.0};
    default:
        throw InvalidArgument("triplet m must be -1, 0 or 1");
    }
}

} // namespace pair_states
} // namespace echochain
