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
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "echochain/statevec.hpp"

namespace echochain::oracle {

/// S_1.S_2 assembled from Kronecker products of Pauli matrices.
Eigen::Matrix4cd spin_dot_spin();

/// exp(-i H t) for Hermitian H through its eigendecomposition.
Matrix4 hermitian_exp(const Eigen::Matrix4cd &h, double t);

/// exp(-i theta S_1.S_2) computed without the closed form.
Matrix4 exchange_unitary_eig(double theta);

/// Largest entrywise distance between two 4x4 matrices.
double max_abs_diff(const Matrix4 &a, const Matrix4 &b);

/// Uniformly random normalized two-spin state.
PairState random_pair_state(std::uint64_t seed);

struct CheckRow {
    std::vector<std::pair<std::string, double>> values;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<CheckRow> rows;
};

struct OracleCheckOptions {
    int max_n = 8;
    std::vector<int> trotter_steps{8, 16, 32};
    std::uint64_t seed = 1;
    /// "" or "theta-sign": flips the exchange angle in the gate under test.
    std::string inject_fault;
};

/// Runs the invariant suite: closed-form gate vs eigendecomposition,
/// two-spin equivalence of mapped pulses, second-order Trotter scaling,
/// S^z and norm conservation, echo revival and transfer peak.
std::vector<CheckResult> run_oracle_checks(const OracleCheckOptions &options);

std::string to_json(const std::vector<CheckResult> &results);

} // namespace echochain::oracle
