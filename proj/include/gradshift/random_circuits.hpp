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

#include <cstdint>
#include <vector>

#include "gradshift/circuit.hpp"

namespace gradshift {

/// Knobs of the seeded circuit generator used by verification sweeps.
struct EnsembleOptions {
    int min_qubits = 1;
    int max_qubits = 4;
    int min_params = 1;
    int max_params = 3;
    std::vector<double> r_values = {0.5, 1.0, 1.3};
    int max_observable_terms = 3;
    int max_fixed_ops = 2;
    bool shared_r = false;           // force all parameterized gates to one r
    bool random_initial_state = true;
};

struct EnsembleInstance {
    CircuitPtr circuit;
    std::vector<double> theta;  // random point, components in [-pi, pi]
    int component;              // random component index
};

/// Deterministic in `seed`: random Pauli-string r-gates interleaved with
/// fixed Pauli rotations, a random initial state, and an observable that is
/// a short real-weighted Pauli sum.
EnsembleInstance make_random_instance(const EnsembleOptions &options, std::uint64_t seed);

}  // namespace gradshift
