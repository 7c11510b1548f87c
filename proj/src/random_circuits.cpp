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

#include "gradshift/random_circuits.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "gradshift/rng.hpp"

namespace gradshift {

namespace {

std::string random_pauli_labels(rng::Sequence &rng, int qubits, bool allow_identity) {
    static constexpr char kLabels[] = {'I', 'X', 'Y', 'Z'};
    while (true) {
        std::string labels(qubits, 'I');
        for (int q = 0; q < qubits; ++q) {
            labels[q] = kLabels[rng.uniform_int(0, 3)];
        }
        if (allow_identity || labels.find_first_not_of('I') != std::string::npos) {
            return labels;
        }
    }
}

StateVector random_state(rng::Sequence &rng, int qubits) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    Vector amps(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        // Box-Muller; complex Gaussian entries give a Haar-uniform direction.
        const double u1 = std::max(rng.uniform(), 1e-300);
        const double u2 = rng.uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        amps(k) = Complex(radius * std::cos(2.0 * std::numbers::pi * u2),
                          radius * std::sin(2.0 * std::numbers::pi * u2));
    }
    amps /= amps.norm();
    return StateVector(std::move(amps));
}

UnitaryMatrix random_pauli_rotation(rng::Sequence &rng, int qubits) {
    const std::string labels = random_pauli_labels(rng, qubits, /*allow_identity=*/false);
    const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const Matrix p = pauli_string(labels).matrix();
    Matrix u = std::cos(angle) * Matrix::Identity(p.rows(), p.cols()) -
               Complex(0, 1) * std::sin(angle) * p;
    return UnitaryMatrix(std::move(u));
}

}  // namespace

EnsembleInstance make_random_instance(const EnsembleOptions &options, std::uint64_t seed) {
    rng::Sequence rng(rng::substream(seed, 0xc1ec0ULL));
    const int qubits = rng.uniform_int(options.min_qubits, options.max_qubits);
    const int n_params = rng.uniform_int(options.min_params, options.max_params);

    const double shared_r =
        options.r_values[rng.uniform_int(0, static_cast<int>(options.r_values.size()) - 1)];

    std::vector<CircuitOp> ops;
    for (int i = 0; i < n_params; ++i) {
        for (int k = rng.uniform_int(0, options.max_fixed_ops); k > 0; --k) {
            ops.push_back(FixedOp{random_pauli_rotation(rng, qubits)});
        }
        const double r =
            options.shared_r
                ? shared_r
                : options.r_values[rng.uniform_int(
                      0, static_cast<int>(options.r_values.size()) - 1)];
        const std::string labels = random_pauli_labels(rng, qubits, /*allow_identity=*/false);
        HermitianOperator generator(r * pauli_string(labels).matrix());
        ops.push_back(ParamOp{RGate::make(generator), i});
    }
    if (rng.uniform() < 0.5) {
        ops.push_back(FixedOp{random_pauli_rotation(rng, qubits)});
    }

    const int terms = rng.uniform_int(1, options.max_observable_terms);
    std::vector<std::pair<double, std::string>> observable_terms;
    for (int k = 0; k < terms; ++k) {
        observable_terms.emplace_back(rng.uniform(-1.0, 1.0),
                                      random_pauli_labels(rng, qubits, /*allow_identity=*/true));
    }

    StateVector initial = options.random_initial_state ? random_state(rng, qubits)
                                                       : StateVector::zero_state(qubits);

    EnsembleInstance instance;
    instance.circuit = std::make_shared<const ParameterizedCircuit>(
        qubits, std::move(ops), std::move(initial), pauli_sum(observable_terms));
    instance.theta.resize(n_params);
    for (double &t : instance.theta) {
        t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    instance.component = rng.uniform_int(0, n_params - 1);
    return instance;
}

}  // namespace gradshift
