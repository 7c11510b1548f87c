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
 * Parameterized circuits, cost functions f(theta) = <psi(theta)|A|psi(theta)>
 * with |psi(theta)> = (prod_k op_k) |psi>, and shot-based estimators.
 *
 * A parameterized op applies exp(-i theta_i G), so a circuit with a single
 * gate reproduces f(theta) = <psi| e^{i theta G} A e^{-i theta G} |psi>.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "gradshift/linalg.hpp"
#include "gradshift/rgate.hpp"
#include "gradshift/sampling.hpp"

namespace gradshift {

struct FixedOp {
    UnitaryMatrix matrix;
};

struct ParamOp {
    RGate gate;
    int param_index;
};

using CircuitOp = std::variant<FixedOp, ParamOp>;

class ParameterizedCircuit {
  public:
    /// Throws DimensionError unless every op and the observable act on
    /// 2^num_qubits dimensions and the parameter indices cover [0, n)
    /// with every index used at least once. The observable's spectral
    /// decomposition is computed here, once, and cached.
    ParameterizedCircuit(int num_qubits, std::vector<CircuitOp> ops,
                         StateVector initial_state, HermitianOperator observable);

    int num_qubits() const { return num_qubits_; }
    int num_params() const { return num_params_; }
    const std::vector<CircuitOp> &ops() const { return ops_; }
    const StateVector &initial_state() const { return initial_state_; }
    const HermitianOperator &observable() const { return observable_; }
    const Spectrum &observable_spectrum() const { return spectrum_; }

    /// Applies all ops in order to the initial state.
    StateVector prepare(const std::vector<double> &theta) const;

    /// F(theta) = <psi(theta)|A|psi(theta)>.
    double evaluate(const std::vector<double> &theta) const;

    /// Number of Param ops referencing `index`.
    int occurrences(int index) const;

    /// The r value of the unique gate referencing `index`; throws
    /// DimensionError when the index is out of range or shared by
    /// several gates.
    double param_r(int index) const;

  private:
    int num_qubits_;
    std::vector<CircuitOp> ops_;
    StateVector initial_state_;
    HermitianOperator observable_;
    int num_params_;
    Spectrum spectrum_;
};

using CircuitPtr = std::shared_ptr<const ParameterizedCircuit>;

/// Restriction of F to a single component: t -> F(theta with component i = t).
/// Requires the component to be driven by exactly one r-gate, which makes
/// the restriction an r-gate parameterized expectation value.
class SingleComponentFunction {
  public:
    SingleComponentFunction(CircuitPtr circuit, std::vector<double> base_point,
                            int component);

    double operator()(double t) const;
    StateVector prepare(double t) const;

    double r() const { return r_; }
    int component() const { return component_; }
    const std::vector<double> &base_point() const { return base_point_; }
    const CircuitPtr &circuit() const { return circuit_; }

    /// Born distribution of the observable at component value t.
    ShotSampler sampler(double t) const;

    /// <A^2> - <A>^2 at component value t, clipped to 0.
    double one_shot_variance(double t) const;

    /// Single Born-rule draw; shot `shot_index` of stream `seed`.
    double sample_single_shot(double t, std::uint64_t seed,
                              std::uint64_t shot_index = 0) const;

    /// Sample mean and unbiased variance of n i.i.d. single shots.
    EstimatorResult sample_n_shots(double t, std::int64_t shots,
                                   std::uint64_t seed) const;

  private:
    CircuitPtr circuit_;
    std::vector<double> base_point_;
    int component_;
    double r_;
};

/// F restricted to component i at the given base point.
SingleComponentFunction restrict_component(CircuitPtr circuit,
                                           std::vector<double> theta, int component);

/// One Born-rule draw of the observable at F's output state.
double sample_single_shot(const ParameterizedCircuit &circuit,
                          const std::vector<double> &theta, std::uint64_t seed,
                          std::uint64_t shot_index = 0);

/// n-shot estimator of F(theta); deterministic in (inputs, seed).
EstimatorResult sample_n_shots(const ParameterizedCircuit &circuit,
                               const std::vector<double> &theta, std::int64_t shots,
                               std::uint64_t seed);

/// One-shot variance sigma_1^2 at theta.
double one_shot_variance(const ParameterizedCircuit &circuit,
                         const std::vector<double> &theta);

}  // namespace gradshift
