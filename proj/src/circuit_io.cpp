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

#include "gradshift/circuit_io.hpp"

#include <cmath>
#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>

#include "gradshift/errors.hpp"
#include "gradshift/rgate.hpp"

namespace gradshift {

namespace {

using nlohmann::json;

std::string resolve_labels(const json &op, int qubits) {
    const std::string pauli = op.at("pauli").get<std::string>();
    if (static_cast<int>(pauli.size()) == qubits) {
        return pauli;
    }
    if (pauli.size() == 1) {
        const int qubit = op.value("qubit", 0);
        if (qubit < 0 || qubit >= qubits) {
            throw ConfigError("qubit index " + std::to_string(qubit) + " out of range");
        }
        std::string labels(qubits, 'I');
        labels[qubit] = pauli[0];
        return labels;
    }
    throw ConfigError("pauli string '" + pauli + "' must have length 1 or " +
                      std::to_string(qubits));
}

StateVector parse_initial_state(const json &doc, int qubits) {
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (!doc.contains("initial_state") || doc["initial_state"] == "zero") {
        return StateVector::zero_state(qubits);
    }
    const json &amps = doc["initial_state"];
    if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim) {
        throw ConfigError("initial_state must be \"zero\" or a list of " +
                          std::to_string(dim) + " [re, im] pairs");
    }
    Vector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const json &entry = amps[k];
        if (!entry.is_array() || entry.size() != 2) {
            throw ConfigError("amplitude entries must be [re, im] pairs");
        }
        v(k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw ConfigError("initial state norm " + std::to_string(norm) +
                          " is too far from 1");
    }
    v /= norm;
    return StateVector(std::move(v));
}

HermitianOperator parse_observable(const json &terms, int qubits) {
    if (!terms.is_array() || terms.empty()) {
        throw ConfigError("observable must be a non-empty list of [coeff, pauli] pairs");
    }
    std::vector<std::pair<double, std::string>> parsed;
    for (const json &term : terms) {
        if (!term.is_array() || term.size() != 2) {
            throw ConfigError("observable terms must be [coeff, pauli] pairs");
        }
        const std::string labels = term[1].get<std::string>();
        if (static_cast<int>(labels.size()) != qubits) {
            throw ConfigError("observable pauli string '" + labels + "' must have length " +
                              std::to_string(qubits));
        }
        parsed.emplace_back(term[0].get<double>(), labels);
    }
    return pauli_sum(parsed);
}

}  // namespace

CircuitPtr parse_circuit(const json &doc) {
    try {
        const int qubits = doc.at("qubits").get<int>();
        if (qubits < 1 || qubits > kMaxQubits) {
            throw ConfigError("qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
        }

        std::vector<CircuitOp> ops;
        for (const json &op : doc.at("ops")) {
            const std::string type = op.at("type").get<std::string>();
            const std::string labels = resolve_labels(op, qubits);
            const Matrix p = pauli_string(labels).matrix();
            if (type == "param") {
                const double scale = op.value("scale", 1.0);
                if (scale == 0.0) {
                    throw ConfigError("param op scale must be nonzero");
                }
                const int index = op.at("index").get<int>();
                ops.push_back(ParamOp{RGate::make(HermitianOperator(scale * p)), index});
            } else if (type == "fixed") {
                const double angle = op.at("angle").get<double>();
                Matrix u = std::cos(angle) * Matrix::Identity(p.rows(), p.cols()) -
                           Complex(0, 1) * std::sin(angle) * p;
                ops.push_back(FixedOp{UnitaryMatrix(std::move(u))});
            } else {
                throw ConfigError("op type must be \"param\" or \"fixed\", got '" + type + "'");
            }
        }

        return std::make_shared<const ParameterizedCircuit>(
            qubits, std::move(ops), parse_initial_state(doc, qubits),
            parse_observable(doc.at("observable"), qubits));
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed circuit spec: ") + e.what());
    } catch (const Error &) {
        throw;
    }
}

CircuitPtr load_circuit(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open circuit file '" + path.string() + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw ConfigError("cannot parse '" + path.string() + "': " + e.what());
    }
    return parse_circuit(doc);
}

HermitianOperator parse_operator_spec(const std::string &spec) {
    if (!spec.empty() && spec.front() == '[') {
        json doc;
        try {
            doc = json::parse(spec);
        } catch (const json::exception &e) {
            throw ConfigError(std::string("malformed operator spec: ") + e.what());
        }
        std::vector<std::pair<double, std::string>> terms;
        for (const json &term : doc) {
            if (!term.is_array() || term.size() != 2) {
                throw ConfigError("operator terms must be [coeff, pauli] pairs");
            }
            terms.emplace_back(term[0].get<double>(), term[1].get<std::string>());
        }
        return pauli_sum(terms);
    }
    return pauli_string(spec);
}

}  // namespace gradshift
