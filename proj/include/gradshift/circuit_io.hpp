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

/**
 * @file
 * Circuit-spec files (JSON):
 *
 *   {
 *     "qubits": 1,
 *     "observable": [[1.0, "X"]],
 *     "initial_state": "zero" | [[re, im], ...],
 *     "ops": [
 *       {"type": "param", "pauli": "Z", "scale": 0.5, "qubit": 0, "index": 0},
 *       {"type": "fixed", "pauli": "XX", "angle": 0.7853981633974483}
 *     ]
 *   }
 *
 * A single-character "pauli" is placed on "qubit" (default 0); a string of
 * length `qubits` is used as written. A parameterized op applies
 * exp(-i theta_index * scale * P), a fixed op applies exp(-i angle * P).
 * All schema violations raise ConfigError.
 */

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gradshift/circuit.hpp"

namespace gradshift {

CircuitPtr parse_circuit(const nlohmann::json &doc);

CircuitPtr load_circuit(const std::filesystem::path &path);

/// Parses either a bare Pauli string ("X", "XY") or a JSON array of
/// [coeff, string] pairs into an operator. Used for observables and the
/// counterexample generators on the command line.
HermitianOperator parse_operator_spec(const std::string &spec);

}  // namespace gradshift
