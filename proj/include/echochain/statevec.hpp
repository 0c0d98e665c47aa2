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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace echochain {

using cplx = std::complex<double>;

/// Row-major 4x4 matrix on a site pair, basis order |q_i q_j> = 00, 01, 10, 11.
using Matrix4 = std::array<cplx, 16>;

/// Normalized two-spin state in the same basis order.
using PairState = std::array<cplx, 4>;

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kNormTol = 1e-10;

/// A 4x4 matrix that passed the unitarity check.
class TwoSiteGate {
  public:
    /// Throws InvalidGate when |U U^dagger - I| exceeds kUnitarityTol entrywise.
    explicit TwoSiteGate(const Matrix4 &matrix);

    const Matrix4 &matrix() const noexcept { return matrix_; }

  private:
    Matrix4 matrix_;
};

/**
 * Dense state of n spin-1/2 sites.
 *
 * Sites are numbered 1..n. Site 1 is the most significant bit of the
 * amplitude index; bit value 0 is spin up.
 */
class StateVector {
  public:
    /// Takes ownership of `amplitudes`. Length must be 2^num_sites and the
    /// norm must be 1 within kNormTol.
    StateVector(int num_sites, std::vector<cplx> amplitudes);

    int num_sites() const noexcept { return num_sites_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    cplx operator[](std::size_t index) const { return amps_[index]; }

    /// Bit position (from the least significant bit) holding site `site`.
    unsigned bit_of(int site) const { return static_cast<unsigned>(num_sites_ - site); }

    void apply_two_site(int site_i, int site_j, const TwoSiteGate &gate);

    /// exp(-i phi sigma^z) on one site.
    void apply_single_site_phase(int site, double phi);

    double norm() const;
    cplx inner(const StateVector &other) const;

    /// Sum over sites of <S^z_i>.
    double total_sz() const;

    /// <psi| P_target (x) 1 |psi> for the pair (site_i, site_j); target
    /// amplitudes are indexed 2*b_i + b_j.
    double pair_projection_fidelity(int site_i, int site_j,
                                    const PairState &target) const;

  private:
    void check_site(int site) const;

    int num_sites_;
    std::vector<cplx> amps_;
};

StateVector basis_state(int num_sites, std::span<const int> bits);

/// (|01> - |10>)/sqrt(2) on sites 1-2, remaining sites up.
StateVector prepare_singlet_head(int num_sites);

/// Free-function form; checks unitarity of `u` before applying.
StateVector apply_two_site(StateVector state, int site_i, int site_j,
                           const Matrix4 &u);

StateVector apply_single_site_phase(StateVector state, int site, double phi);

namespace pair_states {
PairState singlet();
/// m = +1, 0, -1 in terms of S^z; +1 is |00> (both up).
PairState triplet(int m);
} // namespace pair_states

} // namespace echochain
