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
#include <random>

#include "echochain/errors.hpp"
#include "echochain/heis_gates.hpp"
#include "echochain/oracle.hpp"

using namespace echochain;
using std::numbers::pi;

namespace {

Eigen::Matrix4cd as_matrix(const Matrix4 &m) {
    Eigen::Matrix4cd out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = m[4 * r + c];
    return out;
}

Matrix4 scaled(const Matrix4 &m, cplx s) {
    Matrix4 out;
    for (int k = 0; k < 16; ++k) {
        out[k] = s * m[k];
    }
    return out;
}

Matrix4 product(const Matrix4 &a, const Matrix4 &b) {
    Matrix4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k)
                out[4 * r + c] += a[4 * r + k] * b[4 * k + c];
    return out;
}

} // namespace

TEST(SpectralConstants, Values) {
    EXPECT_DOUBLE_EQ(SpectralConstants::eps_singlet, -0.75);
    EXPECT_DOUBLE_EQ(SpectralConstants::eps_triplet, 0.25);
    EXPECT_DOUBLE_EQ(SpectralConstants::delta_eps, -1.0);
}

TEST(ExchangeUnitary, SpinDotSpinOracleHasTwoSpinSpectrum) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(oracle::spin_dot_spin());
    EXPECT_NEAR(solver.eigenvalues()[0], -0.75, 1e-14);
    for (int k = 1; k < 4; ++k) {
        EXPECT_NEAR(solver.eigenvalues()[k], 0.25, 1e-14);
    }
}

TEST(ExchangeUnitary, ClosedFormMatchesEigendecomposition) {
    for (int k = -60; k <= 60; ++k) {
        const double theta = 0.131 * k;
        EXPECT_LT(oracle::max_abs_diff(exchange_unitary(theta), oracle::exchange_unitary_eig(theta)),
                  1e-12)
            << "theta=" << theta;
    }
}

TEST(ExchangeUnitary, Examples) {
    // theta = 0: identity.
    Matrix4 id{};
    id[0] = id[5] = id[10] = id[15] = 1.0;
    EXPECT_LT(oracle::max_abs_diff(exchange_unitary(0.0), id), 1e-15);

    // theta = 2 pi: -i identity, from the oracle.
    EXPECT_LT(oracle::max_abs_diff(oracle::exchange_unitary_eig(2 * pi), scaled(id, {0, -1})),
              1e-12);
    EXPECT_LT(oracle::max_abs_diff(exchange_unitary(2 * pi), scaled(id, {0, -1})), 1e-12);

    // theta = pi on |01>: e^{i pi/4} (-i) |10>.
    const Matrix4 u = exchange_unitary(pi);
    const Matrix4 ue = oracle::exchange_unitary_eig(pi);
    const cplx expected = std::polar(1.0, pi / 4) * cplx(0, -1);
    EXPECT_NEAR(std::abs(ue[4 * 2 + 1] - expected), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(u[4 * 2 + 1] - expected), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(u[4 * 1 + 1]), 0.0, 1e-12);

    EXPECT_THROW(exchange_unitary(std::nan("")), InvalidArgument);
    EXPECT_THROW(exchange_unitary(INFINITY), InvalidArgument);
}

TEST(ExchangeUnitary, SingletAndTripletEigenphases) {
    const double theta = 1.234;
    const Eigen::Matrix4cd u = as_matrix(exchange_unitary(theta));
    const PairState s = pair_states::singlet();
    const Eigen::Vector4cd vs(s[0], s[1], s[2], s[3]);
    EXPECT_LT((u * vs - std::polar(1.0, 0.75 * theta) * vs).norm(), 1e-12);
    for (int m : {-1, 0, 1}) {
        const PairState t = pair_states::triplet(m);
        const Eigen::Vector4cd vt(t[0], t[1], t[2], t[3]);
        EXPECT_LT((u * vt - std::polar(1.0, -0.25 * theta) * vt).norm(), 1e-12);
    }
}

TEST(ExchangeUnitary, PeriodicityAndGroupLaw) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = angle(rng), b = angle(rng);
        EXPECT_LT(oracle::max_abs_diff(exchange_unitary(a + 2 * pi),
                                       scaled(exchange_unitary(a), {0, -1})),
                  1e-12);
        EXPECT_LT(oracle::max_abs_diff(product(exchange_unitary(a), exchange_unitary(b)),
                                       exchange_unitary(a + b)),
                  1e-12);
    }
}

TEST(AfmDuration, Examples) {
    EXPECT_NEAR(afm_duration_for_fm(pi / 2, 1.0, 1.0), 3 * pi / 2, 1e-14);
    EXPECT_NEAR(afm_duration_for_fm(0.0, 1.0, 1.0), 2 * pi, 1e-14);
    EXPECT_NEAR(afm_duration_for_fm(pi, 2.0, 1.0), pi / 2, 1e-14);
}

TEST(AfmDuration, Errors) {
    EXPECT_THROW(afm_duration_for_fm(-0.1, 1.0, 1.0), OutOfRange);
    EXPECT_THROW(afm_duration_for_fm(2 * pi + 1e-6, 1.0, 1.0), OutOfRange);
    EXPECT_THROW(afm_duration_for_fm(1.0, 0.0, 1.0), InvalidArgument);
    EXPECT_THROW(afm_duration_for_fm(1.0, 1.0, -1.0), InvalidArgument);
    EXPECT_NO_THROW(afm_duration_for_fm(2 * pi, 1.0, 1.0));
}

TEST(AfmDuration, MappedPulseEqualsFerromagnetUpToGlobalPhase) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> strength(0.1, 4.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Eigen::Matrix4cd ss = oracle::spin_dot_spin();
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double j_fm = strength(rng), j_afm = strength(rng);
        const double t = unit(rng) * wrap_period(j_fm);
        const PairState p = oracle::random_pair_state(rng());
        const Eigen::Vector4cd psi(p[0], p[1], p[2], p[3]);
        const Eigen::Vector4cd fm = as_matrix(oracle::hermitian_exp(ss, -j_fm * t)) * psi;
        const Eigen::Vector4cd afm =
            as_matrix(exchange_unitary(j_afm * afm_duration_for_fm(t, j_afm, j_fm))) * psi;
        worst = std::max(worst, std::abs(std::abs(afm.dot(fm)) - 1.0));
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(ReduceToPeriod, SplitsWholePeriods) {
    const ReducedDuration r = reduce_to_period(5 * pi, 1.0);
    EXPECT_EQ(r.wraps, 2);
    EXPECT_NEAR(r.remainder, pi, 1e-12);
    const ReducedDuration z = reduce_to_period(0.3, 2.0);
    EXPECT_EQ(z.wraps, 0);
    EXPECT_DOUBLE_EQ(z.remainder, 0.3);
    EXPECT_THROW(reduce_to_period(-1.0, 1.0), InvalidArgument);
    EXPECT_THROW(reduce_to_period(1.0, 0.0), InvalidArgument);
}

TEST(FieldPhase, Product) {
    EXPECT_EQ(field_phase(0.0, 3.0), 0.0);
    EXPECT_DOUBLE_EQ(field_phase(0.5, pi), pi / 2);
    EXPECT_DOUBLE_EQ(field_phase(std::sqrt(2.0), 0.1), 0.1 * std::sqrt(2.0));
}
