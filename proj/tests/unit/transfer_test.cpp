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
#include "echochain/transfer.hpp"

using namespace echochain;

namespace {

TransferResult transfer(int n, double t, TransferEngine engine, int steps = 0) {
    TransferConfig c;
    c.n = n;
    c.t = t;
    c.engine = engine;
    c.n_steps = steps;
    return run_transfer(c);
}

} // namespace

TEST(Transfer, PerfectAtHalfPi) {
    for (int n = 2; n <= 10; ++n) {
        const TransferResult r = transfer(n, kTransferTime, TransferEngine::exact);
        EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << n;
        EXPECT_LT(r.drift.norm, 1e-10);
        EXPECT_LT(r.drift.total_sz, 1e-10);
    }
}

TEST(Transfer, TwoSitesIsStationary) {
    for (double t : {0.0, 0.3, 1.0, 2.0}) {
        EXPECT_NEAR(transfer(2, t, TransferEngine::exact).fidelity, 1.0, 1e-12);
    }
}

TEST(Transfer, InitialOverlap) {
    // For n >= 4 the tail pair starts up-up, orthogonal to the singlet; for
    // n = 3 site 2 is shared and the overlap is 1/4.
    for (int n : {4, 5, 8}) {
        EXPECT_NEAR(transfer(n, 0.0, TransferEngine::exact).fidelity, 0.0, 1e-14);
    }
    EXPECT_NEAR(transfer(3, 0.0, TransferEngine::exact).fidelity, 0.25, 1e-14);
}

TEST(Transfer, CurvePeaksAtEnd) {
    TransferConfig c;
    c.n = 6;
    std::vector<double> grid;
    for (int k = 0; k < 50; ++k) grid.push_back(kTransferTime * k / 49.0);
    const auto curve = transfer_fidelity_curve(c, grid);
    ASSERT_EQ(curve.size(), grid.size());
    for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
        EXPECT_LT(curve[k].fidelity, curve.back().fidelity);
    }
    EXPECT_NEAR(curve.back().fidelity, 1.0, 1e-10);
}

TEST(Transfer, TrotterConvergesToExact) {
    double previous = 1.0;
    for (int steps : {8, 16, 32, 64}) {
        const double err = 1.0 - transfer(6, kTransferTime, TransferEngine::trotter_direct, steps).fidelity;
        EXPECT_GT(err, 0.0);
        EXPECT_LT(err, previous);
        previous = err;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(Transfer, EnginesAgreeNoiseFree) {
    const double direct = transfer(5, kTransferTime, TransferEngine::trotter_direct, 32).fidelity;
    const double simfm = transfer(5, kTransferTime, TransferEngine::trotter_simfm, 32).fidelity;
    EXPECT_NEAR(direct, simfm, 1e-10);
}

TEST(Transfer, CalibrationMeetsBudget) {
    for (int n : {3, 4, 6, 7}) {
        for (TransferEngine e : {TransferEngine::trotter_direct, TransferEngine::trotter_simfm}) {
            const int steps = calibrated_transfer_steps(n, e);
            EXPECT_EQ(steps & (steps - 1), 0);
            const TransferResult r = transfer(n, kTransferTime, e);
            EXPECT_EQ(r.steps_used, steps);
            EXPECT_LT(r.infidelity, kTransferTrotterBudget);
            if (steps > 1) {
                EXPECT_GE(transfer(n, kTransferTime, e, steps / 2).infidelity, kTransferTrotterBudget);
            }
        }
    }
}

TEST(Transfer, NoisyRunConserves) {
    TransferConfig c;
    c.n = 7;
    c.engine = TransferEngine::trotter_simfm;
    c.noise.v = 0.05;
    c.noise.perturb_fields = true;
    c.seed = 3;
    const TransferResult a = run_transfer(c);
    EXPECT_EQ(a.fidelity, run_transfer(c).fidelity);
    EXPECT_LT(a.fidelity, 1.0);
    EXPECT_LT(a.drift.norm, 1e-10);
    EXPECT_LT(a.drift.total_sz, 1e-10);
}

TEST(Transfer, RejectsBadConfig) {
    TransferConfig c;
    c.n = 1;
    EXPECT_THROW(run_transfer(c), InvalidArgument);
    c = {};
    c.noise.v = 0.01;
    EXPECT_THROW(run_transfer(c), InvalidArgument);
    c = {};
    c.t = -0.5;
    EXPECT_THROW(run_transfer(c), InvalidArgument);
    c = {};
    c.n_steps = -2;
    EXPECT_THROW(run_transfer(c), InvalidArgument);
}

TEST(Transfer, EngineNames) {
    EXPECT_EQ(to_string(TransferEngine::exact), "exact");
    EXPECT_EQ(to_string(TransferEngine::trotter_direct), "trotter-direct");
    EXPECT_EQ(to_string(TransferEngine::trotter_simfm), "trotter-simfm");
}
