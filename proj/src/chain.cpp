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

#include "echochain/chain.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include "json.hpp"

#include "echochain/errors.hpp"

namespace echochain {

void ChainSpec::validate() const {
    if (n < 2) {
        throw InvalidArgument("chain needs at least two sites");
    }
    if (couplings.size() != static_cast<std::size_t>(n - 1)) {
        throw InvalidArgument("couplings must have length n-1");
    }
    if (fields.size() != static_cast<std::size_t>(n)) {
        throw InvalidArgument("fields must have length n");
    }
    for (double j : couplings) {
        if (!(j >= 0.0) || !std::isfinite(j)) {
            throw InvalidArgument("couplings must be finite and nonnegative");
        }
    }
    for (double b : fields) {
        if (!std::isfinite(b)) {
            throw InvalidArgument("fields must be finite");
        }
    }
    if (!(exchange_prefactor > 0.0) || !std::isfinite(exchange_prefactor)) {
        throw InvalidArgument("exchange prefactor must be positive");
    }
}

bool ChainSpec::has_fields() const {
    for (double b : fields) {
        if (b != 0.0) {
            return true;
        }
    }
    return false;
}

ChainSpec ChainSpec::with_sign(ExchangeSign s) const {
    ChainSpec out = *this;
    out.sign = s;
    return out;
}

ChainSpec uniform_echo_chain(int n, double j) {
    if (n < 3) {
        throw InvalidArgument("echo chain needs at least three sites");
    }
    if (!(j > 0.0) || !std::isfinite(j)) {
        throw InvalidArgument("echo coupling must be positive");
    }
    ChainSpec spec;
    spec.n = n;
    spec.couplings.assign(n - 1, j);
    spec.couplings[0] = 0.0;
    spec.fields.assign(n, 0.0);
    spec.sign = ExchangeSign::ferromagnetic;
    spec.exchange_prefactor = 1.0;
    return spec;
}

ChainSpec transfer_chain(int n) {
    if (n < 2) {
        throw InvalidArgument("transfer chain needs at least two sites");
    }
    ChainSpec spec;
    spec.n = n;
    spec.couplings.resize(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        spec.couplings[i - 1] = std::sqrt(static_cast<double>(i * (n - i)));
    }
    spec.fields.resize(n);
    for (int i = 1; i <= n; ++i) {
        const double right = (i <= n - 1) ? spec.couplings[i - 1] : 0.0;
        const double left = (i >= 2) ? spec.couplings[i - 2] : 0.0;
        spec.fields[i - 1] = 0.5 * (right + left);
    }
    spec.sign = ExchangeSign::ferromagnetic;
    spec.exchange_prefactor = 2.0;
    return spec;
}

BondPartition partition_odd_even(const ChainSpec &spec) {
    spec.validate();
    BondPartition part;
    for (int i = 1; i <= spec.n - 1; ++i) {
        if (spec.couplings[i - 1] == 0.0) {
            continue;
        }
        (i % 2 == 1 ? part.odd_bonds : part.even_bonds).push_back(Bond{i});
    }
    return part;
}

Eigen::MatrixXd dense_hamiltonian(const ChainSpec &spec, int max_sites) {
    spec.validate();
    if (spec.n > max_sites) {
        throw ResourceLimit("dense Hamiltonian limited to " +
                            std::to_string(max_sites) + " sites, got " +
                            std::to_string(spec.n));
    }
    const int n = spec.n;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double s = sign_factor(spec.sign) * spec.exchange_prefactor;
    auto bit = [n](int site) { return Eigen::Index{1} << (n - site); };
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (int i = 1; i <= n - 1; ++i) {
            const double j = spec.couplings[i - 1];
            if (j == 0.0) {
                continue;
            }
            const bool down_i = (k & bit(i)) != 0;
            const bool down_j = (k & bit(i + 1)) != 0;
            // S.S = Sz Sz + (S+ S- + S- S+)/2
            h(k, k) += s * j * (down_i == down_j ? 0.25 : -0.25);
            if (down_i != down_j) {
                h(k ^ bit(i) ^ bit(i + 1), k) += s * j * 0.5;
            }
        }
        for (int i = 1; i <= n; ++i) {
            h(k, k) += spec.fields[i - 1] * ((k & bit(i)) ? -1.0 : 1.0);
        }
    }
    return h;
}

ExactPropagator::ExactPropagator(const ChainSpec &spec, int max_sites) : n_(spec.n) {
    const Eigen::MatrixXd h = dense_hamiltonian(spec, max_sites);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector ExactPropagator::evolve(const StateVector &state, double t) const {
    if (state.num_sites() != n_) {
        throw InvalidArgument("state size does not match the propagator");
    }
    const auto amps = state.amplitudes();
    const Eigen::Map<const Eigen::VectorXcd> psi(amps.data(),
                                                 static_cast<Eigen::Index>(amps.size()));
    Eigen::VectorXcd coeffs = eigenvectors_.transpose().cast<cplx>() * psi;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs[k] *= std::polar(1.0, -eigenvalues_[k] * t);
    }
    const Eigen::VectorXcd out = eigenvectors_.cast<cplx>() * coeffs;
    return StateVector(n_, std::vector<cplx>(out.data(), out.data() + out.size()));
}

StateVector exact_evolve(const ChainSpec &spec, const StateVector &state, double t) {
    return ExactPropagator(spec).evolve(state, t);
}

std::string to_json(const ChainSpec &spec) {
    nlohmann::json doc;
    doc["n"] = spec.n;
    doc["couplings"] = spec.couplings;
    doc["fields"] = spec.fields;
    doc["sign"] = spec.sign == ExchangeSign::ferromagnetic ? "fm" : "afm";
    doc["prefactor"] = spec.exchange_prefactor;
    return doc.dump();
}

ChainSpec chain_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument(std::string("chain JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidArgument("chain JSON must be an object");
    }
    for (const auto &item : doc.items()) {
        const std::string &key = item.key();
        if (key != "n" && key != "couplings" && key != "fields" &&
            key != "sign" && key != "prefactor") {
            throw InvalidArgument("chain JSON: unknown key '" + key + "'");
        }
    }
    ChainSpec spec;
    try {
        spec.n = doc.at("n").get<int>();
        spec.couplings = doc.at("couplings").get<std::vector<double>>();
        spec.fields = doc.contains("fields")
                          ? doc.at("fields").get<std::vector<double>>()
                          : std::vector<double>(static_cast<std::size_t>(std::max(spec.n, 0)), 0.0);
        const std::string sign = doc.at("sign").get<std::string>();
        if (sign == "fm") {
            spec.sign = ExchangeSign::ferromagnetic;
        } else if (sign == "afm") {
            spec.sign = ExchangeSign::antiferromagnetic;
        } else {
            throw InvalidArgument("chain JSON: sign must be \"fm\" or \"afm\"");
        }
        spec.exchange_prefactor = doc.value("prefactor", 1.0);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("chain JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

} // namespace echochain
