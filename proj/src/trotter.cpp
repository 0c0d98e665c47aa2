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

#include "echochain/trotter.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "echochain/errors.hpp"
#include "echochain/heis_gates.hpp"

namespace echochain {
namespace {

void check_plan_args(const ChainSpec &spec, double t, int n_steps, TrotterMode mode) {
    spec.validate();
    if (n_steps < 1) {
        throw InvalidArgument("Trotter step count must be >= 1");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("evolution time must be finite and >= 0");
    }
    if (mode == TrotterMode::simulated_ferromagnet &&
        spec.sign != ExchangeSign::ferromagnetic) {
        throw InvalidArgument(
            "simulated-ferromagnet mode needs a ferromagnetic chain");
    }
}

ExchangeOp make_exchange(const ChainSpec &spec, Bond bond, double dt,
                         TrotterMode mode, const PlanOptions &options) {
    const double strength = spec.exchange_prefactor * spec.coupling(bond);
    if (mode == TrotterMode::direct) {
        const double coupling = sign_factor(spec.sign) * strength;
        return {bond, coupling * dt, coupling, dt};
    }
    const double j_afm = options.afm_coupling > 0.0 ? options.afm_coupling : strength;
    const double pulse = afm_duration_for_fm(dt, j_afm, strength);
    return {bond, j_afm * pulse, j_afm, pulse};
}

ExchangeLayer exchange_layer(const ChainSpec &spec, const std::vector<Bond> &bonds,
                             double dt, TrotterMode mode, const PlanOptions &options,
                             std::string label) {
    ExchangeLayer layer{std::move(label), {}};
    layer.ops.reserve(bonds.size());
    for (Bond b : bonds) {
        layer.ops.push_back(make_exchange(spec, b, dt, mode, options));
    }
    return layer;
}

std::string describe(const ChainSpec &spec, double t) {
    std::ostringstream out;
    out << (spec.sign == ExchangeSign::ferromagnetic ? "ferromagnetic" : "antiferromagnetic")
        << " chain n=" << spec.n << " prefactor=" << spec.exchange_prefactor
        << (spec.has_fields() ? " with fields" : "") << ", t=" << t;
    return out.str();
}

} // namespace

std::size_t TrotterPlan::gate_count() const {
    std::size_t count = 0;
    for (const Layer &layer : layers) {
        std::visit([&count](const auto &l) { count += l.ops.size(); }, layer);
    }
    return count;
}

TrotterPlan second_order_plan(const ChainSpec &spec, double t, int n_steps,
                              TrotterMode mode, PlanOptions options) {
    check_plan_args(spec, t, n_steps, mode);
    const BondPartition part = partition_odd_even(spec);
    const double dt = t / n_steps;

    const ExchangeLayer half_odd =
        exchange_layer(spec, part.odd_bonds, dt / 2, mode, options, "H_o/2");
    const ExchangeLayer full_even =
        exchange_layer(spec, part.even_bonds, dt, mode, options, "H_e");

    TrotterPlan plan;
    plan.num_sites = spec.n;
    plan.t = t;
    plan.steps = n_steps;
    plan.mode = mode;
    plan.target = describe(spec, t);
    plan.layers.reserve(3 * static_cast<std::size_t>(n_steps));
    for (int step = 0; step < n_steps; ++step) {
        plan.layers.emplace_back(half_odd);
        plan.layers.emplace_back(full_even);
        plan.layers.emplace_back(half_odd);
    }
    return plan;
}

TrotterPlan three_term_plan(const ChainSpec &spec, double t, int n_steps,
                            TrotterMode mode, PlanOptions options) {
    check_plan_args(spec, t, n_steps, mode);
    const BondPartition part = partition_odd_even(spec);
    const double dt = t / n_steps;

    const ExchangeLayer half_odd =
        exchange_layer(spec, part.odd_bonds, dt / 2, mode, options, "H_o/2");
    const ExchangeLayer half_even =
        exchange_layer(spec, part.even_bonds, dt / 2, mode, options, "H_e/2");
    FieldLayer fields{"H_B", {}};
    for (int site = 1; site <= spec.n; ++site) {
        const double b = spec.fields[site - 1];
        if (b != 0.0) {
            fields.ops.push_back({site, field_phase(b, dt)});
        }
    }

    TrotterPlan plan;
    plan.num_sites = spec.n;
    plan.t = t;
    plan.steps = n_steps;
    plan.mode = mode;
    plan.target = describe(spec, t);
    plan.layers.reserve(5 * static_cast<std::size_t>(n_steps));
    for (int step = 0; step < n_steps; ++step) {
        plan.layers.emplace_back(half_odd);
        plan.layers.emplace_back(half_even);
        plan.layers.emplace_back(fields);
        plan.layers.emplace_back(half_even);
        plan.layers.emplace_back(half_odd);
    }
    return plan;
}

StateVector execute_plan(const TrotterPlan &plan, StateVector state,
                         const NoiseModel *noise, Rng *rng) {
    if (state.num_sites() != plan.num_sites) {
        throw InvalidArgument("plan and state have different site counts");
    }
    const bool noisy = noise != nullptr && noise->active();
    if (noisy && rng == nullptr) {
        throw InvalidArgument("noisy execution needs a random generator");
    }
    for (const Layer &layer : plan.layers) {
        if (const auto *ex = std::get_if<ExchangeLayer>(&layer)) {
            for (const ExchangeOp &op : ex->ops) {
                double theta = op.theta;
                if (noisy) {
                    theta *= 1.0 + sample_eta(*rng, noise->v);
                }
                state.apply_two_site(op.bond.first, op.bond.second(),
                                     TwoSiteGate(exchange_unitary(theta)));
            }
        } else {
            for (const FieldOp &op : std::get<FieldLayer>(layer).ops) {
                double phi = op.phi;
                if (noisy && noise->perturb_fields) {
                    phi *= 1.0 + sample_eta(*rng, noise->v);
                }
                state.apply_single_site_phase(op.site, phi);
            }
        }
    }
    return state;
}

std::string to_string(TrotterMode mode) {
    return mode == TrotterMode::direct ? "direct" : "simulated-ferromagnet";
}

std::string to_json(const TrotterPlan &plan) {
    nlohmann::json doc;
    doc["num_sites"] = plan.num_sites;
    doc["t"] = plan.t;
    doc["steps"] = plan.steps;
    doc["mode"] = to_string(plan.mode);
    doc["target"] = plan.target;
    nlohmann::json layers = nlohmann::json::array();
    for (const Layer &layer : plan.layers) {
        nlohmann::json entry;
        if (const auto *ex = std::get_if<ExchangeLayer>(&layer)) {
            entry["kind"] = "exchange";
            entry["label"] = ex->label;
            entry["gates"] = nlohmann::json::array();
            for (const ExchangeOp &op : ex->ops) {
                entry["gates"].push_back({{"sites", {op.bond.first, op.bond.second()}},
                                          {"theta", op.theta},
                                          {"coupling", op.coupling},
                                          {"duration", op.duration}});
            }
        } else {
            const auto &fl = std::get<FieldLayer>(layer);
            entry["kind"] = "field";
            entry["label"] = fl.label;
            entry["gates"] = nlohmann::json::array();
            for (const FieldOp &op : fl.ops) {
                entry["gates"].push_back({{"site", op.site}, {"phi", op.phi}});
            }
        }
        layers.push_back(std::move(entry));
    }
    doc["layers"] = std::move(layers);
    return doc.dump();
}

} // namespace echochain
