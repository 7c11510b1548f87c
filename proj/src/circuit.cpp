// Copyright 2026 The gradshift Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gradshift/circuit.hpp"

#include <algorithm>

#include "gradshift/errors.hpp"

namespace gradshift {

ParameterizedCircuit::ParameterizedCircuit(int num_qubits, std::vector<CircuitOp> ops,
                                           StateVector initial_state,
                                           HermitianOperator observable)
    : num_qubits_(num_qubits),
      ops_(std::move(ops)),
      initial_state_(std::move(initial_state)),
      observable_(std::move(observable)) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    if (initial_state_.dim() != dim || observable_.dim() != dim) {
        throw DimensionError("initial state / observable dimension does not match qubit count");
    }

    int max_index = -1;
    std::vector<int> seen;
    for (const CircuitOp &op : ops_) {
        if (const auto *fixed = std::get_if<FixedOp>(&op)) {
            if (fixed->matrix.dim() != dim) {
                throw DimensionError("fixed op dimension does not match qubit count");
            }
        } else {
            const auto &param = std::get<ParamOp>(op);
            if (param.gate.dim() != dim) {
                throw DimensionError("parameterized op dimension does not match qubit count");
            }
            if (param.param_index < 0) {
                throw DimensionError("negative parameter index");
            }
            max_index = std::max(max_index, param.param_index);
            seen.push_back(param.param_index);
        }
    }
    num_params_ = max_index + 1;
    for (int i = 0; i < num_params_; ++i) {
        if (std::find(seen.begin(), seen.end(), i) == seen.end()) {
            throw DimensionError("parameter index " + std::to_string(i) +
                                 " is never referenced by a gate");
        }
    }

    spectrum_ = eigendecompose(observable_);
}

StateVector ParameterizedCircuit::prepare(const std::vector<double> &theta) const {
    if (static_cast<int>(theta.size()) != num_params_) {
        throw DimensionError("expected " + std::to_string(num_params_) + " parameters, got " +
                             std::to_string(theta.size()));
    }
    StateVector state = initial_state_;
    for (const CircuitOp &op : ops_) {
        if (const auto *fixed = std::get_if<FixedOp>(&op)) {
            state = apply_unitary(state, fixed->matrix);
        } else {
            const auto &param = std::get<ParamOp>(op);
            state = apply_unitary(state, param.gate.matrix(theta[param.param_index]));
        }
    }
    return state;
}

double ParameterizedCircuit::evaluate(const std::vector<double> &theta) const {
    return expectation(prepare(theta), observable_);
}

int ParameterizedCircuit::occurrences(int index) const {
    int count = 0;
    for (const CircuitOp &op : ops_) {
        if (const auto *param = std::get_if<ParamOp>(&op)) {
            count += param->param_index == index ? 1 : 0;
        }
    }
    return count;
}

double ParameterizedCircuit::param_r(int index) const {
    if (index < 0 || index >= num_params_) {
        throw DimensionError("parameter index " + std::to_string(index) + " out of range");
    }
    if (occurrences(index) != 1) {
        throw DimensionError("parameter index " + std::to_string(index) +
                             " is shared by several gates; single-component rules need a "
                             "unique gate per component");
    }
    for (const CircuitOp &op : ops_) {
        if (const auto *param = std::get_if<ParamOp>(&op)) {
            if (param->param_index == index) {
                return param->gate.r();
            }
        }
    }
    throw DimensionError("unreachable: parameter index not found");
}

SingleComponentFunction::SingleComponentFunction(CircuitPtr circuit,
                                                 std::vector<double> base_point,
                                                 int component)
    : circuit_(std::move(circuit)), base_point_(std::move(base_point)), component_(component) {
    if (static_cast<int>(base_point_.size()) != circuit_->num_params()) {
        throw DimensionError("base point length does not match parameter count");
    }
    r_ = circuit_->param_r(component_);  // also range-checks the component
}

double SingleComponentFunction::operator()(double t) const {
    std::vector<double> theta = base_point_;
    theta[component_] = t;
    return circuit_->evaluate(theta);
}

StateVector SingleComponentFunction::prepare(double t) const {
    std::vector<double> theta = base_point_;
    theta[component_] = t;
    return circuit_->prepare(theta);
}

ShotSampler SingleComponentFunction::sampler(double t) const {
    return ShotSampler(circuit_->observable_spectrum(), prepare(t));
}

double SingleComponentFunction::one_shot_variance(double t) const {
    return sampler(t).variance();
}

double SingleComponentFunction::sample_single_shot(double t, std::uint64_t seed,
                                                   std::uint64_t shot_index) const {
    return sampler(t).sample(seed, shot_index);
}

EstimatorResult SingleComponentFunction::sample_n_shots(double t, std::int64_t shots,
                                                        std::uint64_t seed) const {
    return sampler(t).run(shots, seed);
}

SingleComponentFunction restrict_component(CircuitPtr circuit, std::vector<double> theta,
                                           int component) {
    return SingleComponentFunction(std::move(circuit), std::move(theta), component);
}

double sample_single_shot(const ParameterizedCircuit &circuit,
                          const std::vector<double> &theta, std::uint64_t seed,
                          std::uint64_t shot_index) {
    return ShotSampler(circuit.observable_spectrum(), circuit.prepare(theta))
        .sample(seed, shot_index);
}

EstimatorResult sample_n_shots(const ParameterizedCircuit &circuit,
                               const std::vector<double> &theta, std::int64_t shots,
                               std::uint64_t seed) {
    return ShotSampler(circuit.observable_spectrum(), circuit.prepare(theta)).run(shots, seed);
}

double one_shot_variance(const ParameterizedCircuit &circuit,
                         const std::vector<double> &theta) {
    return ShotSampler(circuit.observable_spectrum(), circuit.prepare(theta)).variance();
}

}  // namespace gradshift
