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

#include "echochain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "json.hpp"

#include "echochain/echo.hpp"
#include "echochain/errors.hpp"
#include "echochain/heis_gates.hpp"
#include "echochain/transfer.hpp"
#include "echochain/trotter.hpp"

namespace echochain::oracle {
namespace {

using GateFn = std::function<Matrix4(double)>;

Eigen::Matrix2cd pauli(char axis) {
    Eigen::Matrix2cd m;
    switch (axis) {
    case 'x':
        m << 0, 1, 1, 0;
        break;
    case 'y':
        m << 0, cplx{0, -1}, cplx{0, 1}, 0;
        break;
    default:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Eigen::Vector4cd as_vector(const PairState &p) { return {p[0], p[1], p[2], p[3]}; }

Eigen::Matrix4cd as_matrix(const Matrix4 &m) {
    Eigen::Matrix4cd out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = m[4 * r + c];
    return out;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

CheckResult check_gate_identity(const GateFn &gate) {
    CheckResult r{"gate-closed-form-vs-eigendecomposition", true, "", {}};
    double worst = 0.0;
    for (int k = -40; k <= 40; ++k) {
        const double theta = 0.173 * k;
        worst = std::max(worst, max_abs_diff(gate(theta), exchange_unitary_eig(theta)));
    }
    r.passed = worst < 1e-12;
    r.detail = "max entry deviation " + fmt(worst) + " (tol 1e-12)";
    r.rows.push_back({{{"max_deviation", worst}}});
    return r;
}

CheckResult check_two_spin_equivalence(const GateFn &gate, std::uint64_t seed) {
    CheckResult r{"two-spin-equivalence", true, "", {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ratio(0.2, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Eigen::Matrix4cd ss = spin_dot_spin();
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double j_fm = ratio(rng);
        const double j_afm = ratio(rng);
        const double t = unit(rng) * wrap_period(j_fm);
        const Eigen::Vector4cd psi = as_vector(random_pair_state(rng()));
        const Eigen::Vector4cd fm = as_matrix(hermitian_exp(ss, -j_fm * t)) * psi;
        const double t_prime = afm_duration_for_fm(t, j_afm, j_fm);
        const Eigen::Vector4cd afm = as_matrix(gate(j_afm * t_prime)) * psi;
        worst = std::max(worst, std::abs(std::abs(afm.dot(fm)) - 1.0));
    }
    r.passed = worst < 1e-10;
    r.detail = "1000 random states, max |overlap| deviation " + fmt(worst) + " (tol 1e-10)";
    r.rows.push_back({{{"max_deviation", worst}}});
    return r;
}

CheckResult check_trotter_scaling(const OracleCheckOptions &options) {
    CheckResult r{"trotter-order-scaling", true, "", {}};
    std::vector<int> steps = options.trotter_steps;
    std::sort(steps.begin(), steps.end());
    int judged = 0;
    for (int n = 4; n <= std::min(options.max_n, 10); ++n) {
        const ChainSpec chain = transfer_chain(n);
        const StateVector start = prepare_singlet_head(n);
        const StateVector exact = exact_evolve(chain, start, kTransferTime);
        double previous = -1.0;
        int previous_steps = 0;
        for (int s : steps) {
            const StateVector approx = execute_plan(
                three_term_plan(chain, kTransferTime, s, TrotterMode::direct), start);
            double err = 0.0;
            for (std::size_t k = 0; k < exact.dimension(); ++k) {
                err += std::norm(approx[k] - exact[k]);
            }
            err = std::sqrt(err);
            const double ratio = previous > 0.0 ? previous / err : 0.0;
            r.rows.push_back({{{"n", n}, {"steps", s}, {"error", err}, {"ratio", ratio}}});
            // Ratios only count in the asymptotic regime of a doubling.
            if (previous > 0.0 && previous < 0.1 && s == 2 * previous_steps) {
                ++judged;
                if (ratio < 3.0 || ratio > 5.0) {
                    r.passed = false;
                }
            }
            previous = err;
            previous_steps = s;
        }
    }
    r.detail = std::to_string(judged) + " step doublings judged, ratio window [3, 5]";
    return r;
}

CheckResult check_conservation(const OracleCheckOptions &options) {
    CheckResult r{"sz-and-norm-conservation", true, "", {}};
    Rng rng(options.seed);
    NoiseModel noise{0.05, true};
    double worst_norm = 0.0, worst_sz = 0.0;
    for (int n = 3; n <= options.max_n; ++n) {
        for (const ChainSpec &chain : {uniform_echo_chain(n, 1.0), transfer_chain(n)}) {
            StateVector start = prepare_singlet_head(n);
            const double sz0 = start.total_sz();
            const TrotterPlan plan = three_term_plan(chain, 1.0, 4, TrotterMode::direct);
            const StateVector out = execute_plan(plan, start, &noise, &rng);
            worst_norm = std::max(worst_norm, std::abs(out.norm() - 1.0));
            worst_sz = std::max(worst_sz, std::abs(out.total_sz() - sz0));
        }
    }
    r.passed = worst_norm < kNormTol && worst_sz < kNormTol;
    r.detail = "norm drift " + fmt(worst_norm) + ", S^z drift " + fmt(worst_sz) + " (tol 1e-10)";
    r.rows.push_back({{{"norm_drift", worst_norm}, {"sz_drift", worst_sz}}});
    return r;
}

CheckResult check_echo_revival(const OracleCheckOptions &options) {
    CheckResult r{"echo-revival", true, "", {}};
    double worst = 0.0;
    for (int n = 3; n <= options.max_n; ++n) {
        for (double t : {0.4, 1.0, std::numbers::pi / 2, 2.5}) {
            for (int steps : {1, 4}) {
                EchoConfig config;
                config.n = n;
                config.t = t;
                config.n_steps = steps;
                worst = std::max(worst, std::abs(1.0 - run_echo(config).fidelity));
            }
        }
    }
    r.passed = worst < 1e-9;
    r.detail = "max |1 - f_ec| " + fmt(worst) + " (tol 1e-9)";
    r.rows.push_back({{{"max_deviation", worst}}});
    return r;
}

CheckResult check_transfer_peak(const OracleCheckOptions &options) {
    CheckResult r{"transfer-peak", true, "", {}};
    double worst = 1.0;
    for (int n = 2; n <= std::min(options.max_n, 10); ++n) {
        TransferConfig config;
        config.n = n;
        const double f = run_transfer(config).fidelity;
        worst = std::min(worst, f);
        r.rows.push_back({{{"n", n}, {"fidelity", f}}});
    }
    r.passed = worst >= 0.999;
    r.detail = "min f_tr(pi/2) " + std::to_string(worst) + " (threshold 0.999)";
    return r;
}

} // namespace

Eigen::Matrix4cd spin_dot_spin() {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (char axis : {'x', 'y', 'z'}) {
        out += 0.25 * kron(pauli(axis), pauli(axis));
    }
    return out;
}

Matrix4 hermitian_exp(const Eigen::Matrix4cd &h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h);
    const Eigen::Matrix4cd &v = solver.eigenvectors();
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) {
        phases[k] = std::polar(1.0, -solver.eigenvalues()[k] * t);
    }
    const Eigen::Matrix4cd u = v * phases.asDiagonal() * v.adjoint();
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out[4 * r + c] = u(r, c);
    return out;
}

Matrix4 exchange_unitary_eig(double theta) { return hermitian_exp(spin_dot_spin(), theta); }

double max_abs_diff(const Matrix4 &a, const Matrix4 &b) {
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

PairState random_pair_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    PairState p;
    double norm = 0.0;
    for (cplx &a : p) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (cplx &a : p) {
        a /= norm;
    }
    return p;
}

std::vector<CheckResult> run_oracle_checks(const OracleCheckOptions &options) {
    if (options.max_n < 4) {
        throw InvalidArgument("oracle check needs max_n >= 4");
    }
    if (options.trotter_steps.size() < 2) {
        throw InvalidArgument("oracle check needs at least two Trotter step counts");
    }
    GateFn gate = [](double theta) { return exchange_unitary(theta); };
    if (options.inject_fault == "theta-sign") {
        gate = [](double theta) { return exchange_unitary(-theta); };
    } else if (!options.inject_fault.empty()) {
        throw InvalidArgument("unknown fault '" + options.inject_fault + "'");
    }
    return {check_gate_identity(gate),
            check_two_spin_equivalence(gate, options.seed),
            check_trotter_scaling(options),
            check_conservation(options),
            check_echo_revival(options),
            check_transfer_peak(options)};
}

std::string to_json(const std::vector<CheckResult> &results) {
    nlohmann::json doc;
    bool all = true;
    doc["checks"] = nlohmann::json::array();
    for (const CheckResult &c : results) {
        nlohmann::json entry{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        entry["rows"] = nlohmann::json::array();
        for (const CheckRow &row : c.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (const auto &[key, value] : row.values) {
                obj[key] = value;
            }
            entry["rows"].push_back(std::move(obj));
        }
        all = all && c.passed;
        doc["checks"].push_back(std::move(entry));
    }
    doc["passed"] = all;
    return doc.dump(2);
}

} // namespace echochain::oracle
