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

#include "echochain/errors.hpp"
#include "echochain/meanfield.hpp"

using namespace echochain;

namespace {

/// Pair state of the three-site chain with J_23 = 2 after time t: site 3
/// stays up and precesses site 2 about z at unit rate.
PairState precessed_singlet(double t) {
    const double r = 1.0 / std::sqrt(2.0);
    return {cplx{0, 0}, r * std::polar(1.0, t / 2), -r * std::polar(1.0, -t / 2),
            cplx{0, 0}};
}

double pair_error(const PairState &a, const PairState &b) {
    double e = 0.0;
    for (int k = 0; k < 4; ++k) e = std::max(e, std::abs(a[k] - b[k]));
    return e;
}

MeanFieldState evolve(MeanFieldState s, const ChainSpec &spec, double sign, double t,
                      int steps) {
    for (int k = 0; k < steps; ++k) s = rk4_step(s, spec, sign, t / steps);
    return s;
}

} // namespace

TEST(MeanField, InitialState) {
    const MeanFieldState s = initial_meanfield_state(5);
    EXPECT_EQ(s.num_sites(), 5);
    for (const SpinState &sp : s.spins) {
        const Vec3 m = spin_expectation(sp);
        EXPECT_DOUBLE_EQ(m[2], 0.5);
        EXPECT_DOUBLE_EQ(m[0], 0.0);
    }
    const Vec3 s2 = pair_second_spin_expectation(s.pair);
    for (double c : s2) EXPECT_NEAR(c, 0.0, 1e-15);
    EXPECT_THROW(initial_meanfield_state(2), InvalidArgument);
}

TEST(MeanField, SpinExpectationOfTiltedSpin) {
    const double r = 1.0 / std::sqrt(2.0);
    const Vec3 x = spin_expectation({cplx{r, 0}, cplx{r, 0}});
    EXPECT_NEAR(x[0], 0.5, 1e-15);
    EXPECT_NEAR(x[1], 0.0, 1e-15);
    const Vec3 y = spin_expectation({cplx{r, 0}, cplx{0, r}});
    EXPECT_NEAR(y[1], 0.5, 1e-15);
    EXPECT_NEAR(y[2], 0.0, 1e-15);
}

TEST(MeanField, InitialFields) {
    const ChainSpec spec = uniform_echo_chain(6, 1.3);
    const auto h = mean_fields(initial_meanfield_state(6), spec, 1.0);
    ASSERT_EQ(h.size(), 5u);
    // <S_2> vanishes in the singlet, so site 3 only sees site 4.
    EXPECT_NEAR(h[0][2], 1.3 / 2, 1e-15);
    EXPECT_NEAR(h[1][2], 1.3 / 2, 1e-15);
    for (std::size_t k = 2; k + 1 < h.size(); ++k) EXPECT_NEAR(h[k][2], 1.3, 1e-15);
    EXPECT_NEAR(h.back()[2], 1.3 / 2, 1e-15);
    const auto flipped = mean_fields(initial_meanfield_state(6), spec, -1.0);
    for (std::size_t k = 0; k < h.size(); ++k)
        for (int c = 0; c < 3; ++c) EXPECT_EQ(flipped[k][c], -h[k][c]);
}

TEST(MeanField, ZeroCouplingsFreezeState) {
    ChainSpec spec = uniform_echo_chain(4, 1.0);
    spec.couplings.assign(3, 0.0);
    const MeanFieldState s0 = initial_meanfield_state(4);
    const MeanFieldState s = evolve(s0, spec, 1.0, 2.0, 100);
    EXPECT_LT(pair_error(s.pair, s0.pair), 1e-15);
}

TEST(MeanField, PrecessionClosedForm) {
    const ChainSpec spec = uniform_echo_chain(3, 2.0);
    const MeanFieldState s = evolve(initial_meanfield_state(3), spec, 1.0, 2.0, 2000);
    EXPECT_LT(pair_error(s.pair, precessed_singlet(2.0)), 1e-12);
    EXPECT_NEAR(spin_expectation(s.spins[0])[2], 0.5, 1e-14);
}

TEST(MeanField, FourthOrderGlobalError) {
    const ChainSpec spec = uniform_echo_chain(3, 2.0);
    const PairState exact = precessed_singlet(3.0);
    const double coarse = pair_error(evolve(initial_meanfield_state(3), spec, 1.0, 3.0, 10).pair, exact);
    const double fine = pair_error(evolve(initial_meanfield_state(3), spec, 1.0, 3.0, 20).pair, exact);
    EXPECT_GT(coarse / fine, 13.0);
    EXPECT_LT(coarse / fine, 19.0);
}

TEST(MeanField, NormStaysPinned) {
    const ChainSpec spec = uniform_echo_chain(5, 1.0);
    MeanFieldState s = evolve(initial_meanfield_state(5), spec, 1.0, 10.0, 10000);
    double pn = 0.0;
    for (const cplx &a : s.pair) pn += std::norm(a);
    EXPECT_NEAR(pn, 1.0, 1e-12);
    for (const SpinState &sp : s.spins) EXPECT_NEAR(std::norm(sp[0]) + std::norm(sp[1]), 1.0, 1e-12);
}

TEST(MeanFieldEcho, HamiltonianSignRevives) {
    MeanFieldEchoConfig c;
    c.t = 2.0;
    const MeanFieldResult r = run_meanfield_echo(c);
    EXPECT_NEAR(r.fidelity, 1.0, 1e-10);
    EXPECT_LT(r.max_second_spin, 1e-12);
    EXPECT_LT(r.max_bloch_deviation, 1e-12);
}

TEST(MeanFieldEcho, LiteralSignDeviates) {
    // Both legs then precess site 2 the same way: f = cos^2(J t / 2).
    MeanFieldEchoConfig c;
    c.sign_convention = SignConvention::literal;
    for (double t : {0.5, 1.0, 3.0}) {
        c.t = t;
        EXPECT_NEAR(run_meanfield_echo(c).fidelity, std::pow(std::cos(t / 2), 2), 1e-9) << t;
    }
}

TEST(MeanFieldEcho, StepHalvingConverged) {
    MeanFieldEchoConfig c;
    c.t = 2.7;
    c.sign_convention = SignConvention::literal;
    const double f1 = run_meanfield_echo(c).fidelity;
    c.integrator.dt /= 2;
    EXPECT_LT(std::abs(run_meanfield_echo(c).fidelity - f1), 1e-6);
}

TEST(MeanFieldEcho, MirroredPulseParity) {
    MeanFieldEchoConfig c;
    c.schedule = MeanFieldSchedule::mirrored_pulse;
    c.t = 1.0;
    c.n = 6;
    c.n_steps = 4;
    EXPECT_NEAR(run_meanfield_echo(c).fidelity, 1.0, 1e-8);
    c.n_steps = 3;
    EXPECT_NEAR(run_meanfield_echo(c).fidelity, 0.0, 1e-8);
}

TEST(MeanFieldEcho, Deterministic) {
    MeanFieldEchoConfig c;
    c.t = 1.1;
    c.sign_convention = SignConvention::literal;
    EXPECT_EQ(run_meanfield_echo(c).fidelity, run_meanfield_echo(c).fidelity);
}

TEST(MeanFieldEcho, RejectsBadConfig) {
    MeanFieldEchoConfig c;
    c.integrator.dt = 0.0;
    EXPECT_THROW(run_meanfield_echo(c), InvalidArgument);
    c = {};
    c.t = -1.0;
    EXPECT_THROW(run_meanfield_echo(c), InvalidArgument);
    EXPECT_THROW(rk4_step(initial_meanfield_state(4), uniform_echo_chain(5, 1.0), 1.0, 0.1),
                 InvalidArgument);
}

TEST(MeanFieldEcho, Names) {
    EXPECT_EQ(to_string(MeanFieldSchedule::mirrored_pulse), "mirrored-pulse");
    EXPECT_EQ(to_string(SignConvention::literal), "literal");
}
