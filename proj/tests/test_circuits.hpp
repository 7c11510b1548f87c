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

#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "gradshift/circuit.hpp"
#include "gradshift/rgate.hpp"

namespace gradshift::testing {

inline StateVector plus_state(int qubits = 1) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    Vector amps = Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    return StateVector(std::move(amps));
}

/// f(theta) = <+| e^{i theta Z/2} X e^{-i theta Z/2} |+> = cos(theta), r = 1/2.
inline CircuitPtr cos_t_circuit() {
    const RGate gate = RGate::make(HermitianOperator(0.5 * pauli_string("Z").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        1, std::vector<CircuitOp>{ParamOp{gate, 0}}, plus_state(), pauli_string("X"));
}

/// Same state family measured in Y: f(theta) = sin(theta), r = 1/2.
inline CircuitPtr sin_t_circuit() {
    const RGate gate = RGate::make(HermitianOperator(0.5 * pauli_string("Z").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        1, std::vector<CircuitOp>{ParamOp{gate, 0}}, plus_state(), pauli_string("Y"));
}

/// f(theta) = cos(2 theta): generator Z with r = 1.
inline CircuitPtr cos_2t_circuit() {
    const RGate gate = RGate::make(pauli_string("Z"));
    return std::make_shared<const ParameterizedCircuit>(
        1, std::vector<CircuitOp>{ParamOp{gate, 0}}, plus_state(), pauli_string("X"));
}

/// Constant cost function: identity observable over any gate.
inline CircuitPtr constant_circuit() {
    const RGate gate = RGate::make(HermitianOperator(0.5 * pauli_string("Z").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        1, std::vector<CircuitOp>{ParamOp{gate, 0}}, plus_state(),
        HermitianOperator(Matrix::Identity(2, 2)));
}

/// Observable Z on |0> rotated by Z/2: eigenstate at every angle, so the
/// estimator has zero variance.
inline CircuitPtr eigenstate_circuit() {
    const RGate gate = RGate::make(HermitianOperator(0.5 * pauli_string("Z").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        1, std::vector<CircuitOp>{ParamOp{gate, 0}}, StateVector::zero_state(1),
        pauli_string("Z"));
}

/// Two commuting Z/2 rotations on different qubits of |++> measured in XX:
/// f(t0, t1) = cos(t0) cos(t1); both components have r = 1/2.
inline CircuitPtr product_cos_cos_circuit() {
    const RGate g0 = RGate::make(HermitianOperator(0.5 * pauli_string("ZI").matrix()));
    const RGate g1 = RGate::make(HermitianOperator(0.5 * pauli_string("IZ").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        2, std::vector<CircuitOp>{ParamOp{g0, 0}, ParamOp{g1, 1}}, plus_state(2),
        pauli_string("XX"));
}

/// As above but measured in X on the first qubit only:
/// f(t0, t1) = cos(t0), independent of t1.
inline CircuitPtr first_axis_only_circuit() {
    const RGate g0 = RGate::make(HermitianOperator(0.5 * pauli_string("ZI").matrix()));
    const RGate g1 = RGate::make(HermitianOperator(0.5 * pauli_string("IZ").matrix()));
    return std::make_shared<const ParameterizedCircuit>(
        2, std::vector<CircuitOp>{ParamOp{g0, 0}, ParamOp{g1, 1}}, plus_state(2),
        pauli_string("XI"));
}

/// Three r = 1/2 rotations interleaved with an entangling XX rotation;
/// used for evaluation-count accounting.
inline CircuitPtr three_param_circuit() {
    const RGate g0 = RGate::make(HermitianOperator(0.5 * pauli_string("ZI").matrix()));
    const RGate g1 = RGate::make(HermitianOperator(0.5 * pauli_string("IX").matrix()));
    const RGate g2 = RGate::make(HermitianOperator(0.5 * pauli_string("YI").matrix()));
    const Matrix xx = pauli_string("XX").matrix();
    const double angle = 0.25 * std::numbers::pi;
    UnitaryMatrix entangler(std::cos(angle) * Matrix::Identity(4, 4) -
                            Complex(0, 1) * std::sin(angle) * xx);
    return std::make_shared<const ParameterizedCircuit>(
        2,
        std::vector<CircuitOp>{ParamOp{g0, 0}, FixedOp{entangler}, ParamOp{g1, 1},
                               ParamOp{g2, 2}},
        plus_state(2), pauli_sum({{1.0, "ZI"}, {0.5, "XX"}}));
}

}  // namespace gradshift::testing
