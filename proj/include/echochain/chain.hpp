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

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "echochain/statevec.hpp"

namespace echochain {

enum class ExchangeSign { ferromagnetic, antiferromagnetic };

/// +1 for antiferromagnetic, -1 for ferromagnetic.
inline double sign_factor(ExchangeSign s) {
    return s == ExchangeSign::antiferromagnetic ? 1.0 : -1.0;
}

/// Nearest-neighbour bond between sites `first` and `first + 1`.
struct Bond {
    int first;
    int second() const { return first + 1; }
    bool operator==(const Bond &) const = default;
};

/**
 * Open Heisenberg chain
 *
 *   H = s * prefactor * sum_i J_{i,i+1} S_i.S_{i+1} + sum_i B_i sigma^z_i,
 *
 * with s = +1 (antiferromagnetic) or -1 (ferromagnetic).
 */
struct ChainSpec {
    int n = 0;
    std::vector<double> couplings; ///< J_{i,i+1}, length n-1, >= 0
    std::vector<double> fields;    ///< B_i, length n
    ExchangeSign sign = ExchangeSign::antiferromagnetic;
    double exchange_prefactor = 1.0;

    /// Throws InvalidArgument on any length or sign violation.
    void validate() const;

    double coupling(Bond b) const { return couplings[b.first - 1]; }
    bool has_fields() const;
    ChainSpec with_sign(ExchangeSign s) const;
};

/// Echo chain: bond (1,2) off, all other bonds j, no fields, ferromagnetic.
ChainSpec uniform_echo_chain(int n, double j);

/// Engineered transfer chain: J_i = sqrt(i (n - i)), B_i the mean of the
/// adjacent couplings (missing boundary bonds count as zero), prefactor 2,
/// ferromagnetic.
ChainSpec transfer_chain(int n);

struct BondPartition {
    std::vector<Bond> odd_bonds;  ///< first site odd
    std::vector<Bond> even_bonds; ///< first site even
};

/// Splits the nonzero bonds into two layers of pairwise disjoint bonds.
BondPartition partition_odd_even(const ChainSpec &spec);

inline constexpr int kOracleSiteLimit = 14;

/// Dense real symmetric Hamiltonian (the chain has no sigma^y terms).
/// Throws ResourceLimit above `max_sites`.
Eigen::MatrixXd dense_hamiltonian(const ChainSpec &spec,
                                  int max_sites = kOracleSiteLimit);

/// exp(-i H t) through a cached eigendecomposition of the dense Hamiltonian.
class ExactPropagator {
  public:
    explicit ExactPropagator(const ChainSpec &spec,
                             int max_sites = kOracleSiteLimit);

    StateVector evolve(const StateVector &state, double t) const;

    const Eigen::VectorXd &eigenvalues() const { return eigenvalues_; }
    int num_sites() const { return n_; }

  private:
    int n_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

StateVector exact_evolve(const ChainSpec &spec, const StateVector &state, double t);

std::string to_json(const ChainSpec &spec);

/// Parses {"n", "couplings", "fields", "sign": "fm"|"afm", "prefactor"};
/// unknown keys are rejected.
ChainSpec chain_from_json(const std::string &text);

} // namespace echochain
