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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "echochain/errors.hpp"
#include "echochain/heis_gates.hpp"
#include "echochain/statevec.hpp"
#include "test_support.hpp"

using namespace echochain;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

Matrix4 swap_matrix() {
    Matrix4 m{};
    m[0] = m[6] = m[9] = m[15] = 1.0;
    return m;
}

Matrix4 identity_matrix() {
    Matrix4 m{};
    m[0] = m[5] = m[10] = m[15] = 1.0;
    return m;
}

} // namespace

TEST(BasisState, EncodesSiteOneAsMostSignificantBit) {
    const std::vector<int> b00{0, 0}, b01{0, 1}, b100{1, 0, 0};
    const StateVector s00 = basis_state(2, b00);
    EXPECT_EQ(s00[0], cplx(1.0));
    EXPECT_EQ(s00[1], cplx(0.0));
    const StateVector s01 = basis_state(2, b01);
    EXPECT_EQ(s01[1], cplx(1.0));
    EXPECT_EQ(s01[0], cplx(0.0));
    const StateVector s100 = basis_state(3, b100);
    EXPECT_EQ(s100[4], cplx(1.0));
}

TEST(BasisState, RejectsBadArguments) {
    const std::vector<int> one{0}, three{0, 0, 0}, bad{0, 2};
    EXPECT_THROW(basis_state(1, one), InvalidArgument);
    EXPECT_THROW(basis_state(2, three), InvalidArgument);
    EXPECT_THROW(basis_state(2, bad), InvalidArgument);
}

TEST(SingletHead, Amplitudes) {
    const StateVector s2 = prepare_singlet_head(2);
    EXPECT_NEAR(s2[1].real(), kH, 1e-15);
    EXPECT_NEAR(s2[2].real(), -kH, 1e-15);
    EXPECT_EQ(s2[0], cplx(0.0));
    EXPECT_EQ(s2[3], cplx(0.0));

    const StateVector s3 = prepare_singlet_head(3);
    EXPECT_NEAR(s3[2].real(), kH, 1e-15);
    EXPECT_NEAR(s3[4].real(), -kH, 1e-15);

    const StateVector s4 = prepare_singlet_head(4);
    for (std::size_t k = 0; k < 16; ++k) {
        if (k == 4) {
            EXPECT_NEAR(s4[k].real(), kH, 1e-15);
        } else if (k == 8) {
            EXPECT_NEAR(s4[k].real(), -kH, 1e-15);
        } else {
            EXPECT_EQ(s4[k], cplx(0.0));
        }
    }
    EXPECT_THROW(prepare_singlet_head(1), InvalidArgument);
}

TEST(ApplyTwoSite, IdentityAndSwap) {
    const StateVector s = test_support::random_state(4, 7);
    const StateVector same = apply_two_site(s, 2, 4, identity_matrix());
    EXPECT_LT(test_support::distance(s, same), 1e-15);

    const std::vector<int> b01{0, 1}, b10{1, 0};
    const StateVector swapped = apply_two_site(basis_state(2, b01), 1, 2, swap_matrix());
    EXPECT_LT(test_support::distance(swapped, basis_state(2, b10)), 1e-15);
}

TEST(ApplyTwoSite, ExchangeOnSingletGivesSingletPhase) {
    const double theta = 0.77;
    const StateVector s = prepare_singlet_head(4);
    const StateVector out = apply_two_site(s, 1, 2, exchange_unitary(theta));
    const cplx phase = std::polar(1.0, 3.0 * theta / 4.0);
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        EXPECT_NEAR(std::abs(out[k] - phase * s[k]), 0.0, 1e-14);
    }
}

TEST(ApplyTwoSite, Errors) {
    StateVector s = prepare_singlet_head(3);
    EXPECT_THROW(apply_two_site(s, 0, 2, identity_matrix()), InvalidArgument);
    EXPECT_THROW(apply_two_site(s, 2, 2, identity_matrix()), InvalidArgument);
    EXPECT_THROW(apply_two_site(s, 1, 4, identity_matrix()), InvalidArgument);
    Matrix4 bad = identity_matrix();
    bad[0] = 1.0 + 1e-9;
    EXPECT_THROW(apply_two_site(s, 1, 2, bad), InvalidGate);
}

TEST(ApplyTwoSite, NonAdjacentAndReversedOrderMatchDenseSwapConjugation) {
    // u on (3,1) equals SWAP(1,3) u(1,3) SWAP(1,3) with u read in (1,3) order
    // after swapping its qubits.
    const Matrix4 u = exchange_unitary(1.3);
    Matrix4 local{};
    // Random non-symmetric unitary: exchange times a phase on one qubit.
    const cplx p = std::polar(1.0, 0.4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            local[4 * r + c] = u[4 * r + c] * ((c & 2) ? p : cplx(1.0));
    Matrix4 flipped{};
    auto perm = [](int idx) { return ((idx & 1) << 1) | (idx >> 1); };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            flipped[4 * perm(r) + perm(c)] = local[4 * r + c];
    const StateVector s = test_support::random_state(4, 11);
    const StateVector a = apply_two_site(s, 3, 1, local);
    const StateVector b = apply_two_site(s, 1, 3, flipped);
    EXPECT_LT(test_support::distance(a, b), 1e-14);
}

TEST(ApplyTwoSite, InverseRestoresState) {
    const StateVector s = test_support::random_state(5, 3);
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            if (i == j) {
                continue;
            }
            const double theta = 0.3 * i - 0.7 * j;
            StateVector t = apply_two_site(s, i, j, exchange_unitary(theta));
            t = apply_two_site(t, i, j, exchange_unitary(-theta));
            EXPECT_LT(test_support::distance(s, t), 1e-10);
        }
    }
}

TEST(ApplyTwoSite, LocalityLeavesOtherMarginalsUnchanged) {
    // u = identity (x) phase only changes amplitudes' phases on site j.
    Matrix4 u{};
    const cplx p = std::polar(1.0, 0.9);
    u[0] = 1.0;
    u[5] = p;
    u[10] = 1.0;
    u[15] = p;
    const StateVector s = test_support::random_state(5, 19);
    const StateVector t = apply_two_site(s, 2, 4, u);
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        EXPECT_NEAR(std::norm(t[k]), std::norm(s[k]), 1e-15);
    }
}

TEST(SingleSitePhase, Examples) {
    const StateVector s = test_support::random_state(3, 5);
    EXPECT_LT(test_support::distance(apply_single_site_phase(s, 2, 0.0), s), 1e-16);

    const std::vector<int> b00{0, 0};
    const StateVector up = apply_single_site_phase(basis_state(2, b00), 1, std::numbers::pi);
    EXPECT_NEAR(std::abs(up[0] - cplx(-1.0)), 0.0, 1e-15);

    const StateVector plus(2, {kH, kH, 0.0, 0.0}); // site 2 in (|0>+|1>)/sqrt2
    const StateVector rotated = apply_single_site_phase(plus, 2, std::numbers::pi / 2);
    EXPECT_NEAR(std::abs(rotated[0] - kH * std::polar(1.0, -std::numbers::pi / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rotated[1] - kH * std::polar(1.0, std::numbers::pi / 2)), 0.0, 1e-15);

    EXPECT_THROW(apply_single_site_phase(s, 4, 0.1), InvalidArgument);
}

TEST(PairProjection, Examples) {
    const StateVector s4 = prepare_singlet_head(4);
    EXPECT_NEAR(s4.pair_projection_fidelity(1, 2, pair_states::singlet()), 1.0, 1e-12);
    EXPECT_NEAR(s4.pair_projection_fidelity(1, 2, pair_states::triplet(0)), 0.0, 1e-12);

    const StateVector s3 = prepare_singlet_head(3);
    EXPECT_NEAR(s3.pair_projection_fidelity(2, 3, pair_states::singlet()), 0.25, 1e-12);
    EXPECT_THROW(s3.pair_projection_fidelity(2, 2, pair_states::singlet()), InvalidArgument);
    EXPECT_THROW(s3.pair_projection_fidelity(0, 2, pair_states::singlet()), InvalidArgument);
}

TEST(PairProjection, MatchesDenseProjectorOnRandomStates) {
    const int n = 5;
    for (int site = 1; site < n; ++site) {
        const StateVector s = test_support::random_state(n, 200 + site);
        const Eigen::MatrixXcd p =
            test_support::embed_adjacent(test_support::projector(pair_states::singlet()), n, site);
        const Eigen::VectorXcd v = test_support::to_eigen(s);
        const double expected = (v.adjoint() * p * v)(0, 0).real();
        EXPECT_NEAR(s.pair_projection_fidelity(site, site + 1, pair_states::singlet()),
                    expected, 1e-12);
    }
}

TEST(TotalSz, Examples) {
    const std::vector<int> b000{0, 0, 0};
    EXPECT_DOUBLE_EQ(basis_state(3, b000).total_sz(), 1.5);
    EXPECT_NEAR(prepare_singlet_head(2).total_sz(), 0.0, 1e-15);
    EXPECT_NEAR(prepare_singlet_head(5).total_sz(), 1.5, 1e-15);
}

TEST(StateVectorInvariants, NormAndSzConservedOverRandomGateSequences) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> site(1, 6);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    StateVector s = prepare_singlet_head(6);
    const double sz0 = s.total_sz();
    for (int g = 0; g < 500; ++g) {
        const int i = site(rng);
        int j = site(rng);
        while (j == i) {
            j = site(rng);
        }
        s.apply_two_site(i, j, TwoSiteGate(exchange_unitary(angle(rng))));
        s.apply_single_site_phase(site(rng), angle(rng));
        ASSERT_LT(std::abs(s.norm() - 1.0), kNormTol);
        ASSERT_LT(std::abs(s.total_sz() - sz0), 1e-10);
    }
}

TEST(StateVectorConstruction, RejectsBadLengthOrNorm) {
    EXPECT_THROW(StateVector(2, std::vector<cplx>(3, 0.5)), InvalidArgument);
    EXPECT_THROW(StateVector(2, std::vector<cplx>(4, 1.0)), InvalidArgument);
}
