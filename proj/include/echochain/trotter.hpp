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

#include <string>
#include <variant>
#include <vector>

#include "echochain/chain.hpp"
#include "echochain/noise.hpp"
#include "echochain/statevec.hpp"

namespace echochain {

enum class TrotterMode {
    direct,                ///< exchange evolved with its own sign
    simulated_ferromagnet, ///< ferromagnetic steps replaced by mapped AFM pulses
};

/// One exchange pulse: angle theta = coupling * duration.
struct ExchangeOp {
    Bond bond;
    double theta;
    double coupling; ///< signed strength applied during the pulse
    double duration;
};

struct FieldOp {
    int site;
    double phi; ///< realized as exp(-i phi sigma^z)
};

struct ExchangeLayer {
    std::string label;
    std::vector<ExchangeOp> ops; ///< pairwise disjoint bonds
};

struct FieldLayer {
    std::string label;
    std::vector<FieldOp> ops;
};

using Layer = std::variant<ExchangeLayer, FieldLayer>;

struct TrotterPlan {
    int num_sites = 0;
    double t = 0.0;
    int steps = 0;
    TrotterMode mode = TrotterMode::direct;
    std::string target;
    std::vector<Layer> layers;

    std::size_t gate_count() const;
};

struct PlanOptions {
    /// Antiferromagnetic pulse strength used in simulated-ferromagnet mode.
    /// Zero means "equal to the ferromagnetic strength of the bond".
    double afm_coupling = 0.0;
};

/**
 * Symmetric split (H_o/2, H_e, H_o/2) repeated n_steps times.
 *
 * Fields, if any, are ignored; use three_term_plan for chains with fields.
 * In simulated-ferromagnet mode the chain must be ferromagnetic and every
 * sub-step duration must fit in one wrap period of its bond (OutOfRange).
 */
TrotterPlan second_order_plan(const ChainSpec &spec, double t, int n_steps,
                              TrotterMode mode, PlanOptions options = {});

/// Symmetric split (H_o/2, H_e/2, H_B, H_e/2, H_o/2) repeated n_steps times.
TrotterPlan three_term_plan(const ChainSpec &spec, double t, int n_steps,
                            TrotterMode mode, PlanOptions options = {});

/// Applies every layer in order. With an active noise model each exchange
/// angle is multiplied by (1 + eta), one fresh eta per gate.
StateVector execute_plan(const TrotterPlan &plan, StateVector state,
                         const NoiseModel *noise = nullptr, Rng *rng = nullptr);

std::string to_json(const TrotterPlan &plan);

std::string to_string(TrotterMode mode);

} // namespace echochain
