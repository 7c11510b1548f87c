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

#include "gradshift/nogo.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "gradshift/errors.hpp"
#include "gradshift/rgate.hpp"
#include "gradshift/trig_poly.hpp"

namespace gradshift {

namespace {

/// <state|[iM, A]|state>; real because [iM, A] is Hermitian for Hermitian M, A.
double commutator_derivative(const StateVector &state, const HermitianOperator &m,
                             const HermitianOperator &a) {
    const Matrix bracket =
        Complex(0, 1) * (m.matrix() * a.matrix() - a.matrix() * m.matrix());
    return expectation(state, HermitianOperator(bracket));
}

}  // namespace

CounterexamplePair build_custom(const HermitianOperator &generator_g,
                                const HermitianOperator &generator_f,
                                const HermitianOperator &observable,
                                const StateVector &psi, double zeta, double gamma,
                                const NogoOptions &options) {
    const RGate gate_g = RGate::make(generator_g);
    const RGate gate_f = RGate::make(generator_f);
    const double r = gate_g.r();
    if (std::abs(gate_f.r() - r) > 1e-9 * std::max(r, gate_f.r())) {
        throw ValidationError("the two generators must share the same r, got " +
                              std::to_string(r) + " and " + std::to_string(gate_f.r()));
    }
    // Open interval, with a guard band so the boundary gamma = pi/r is
    // rejected even when r carries eigensolver rounding.
    if (!(gamma > 0.0 && gamma < std::numbers::pi / r * (1.0 - 1e-12))) {
        throw ValidationError("gamma must satisfy 0 < gamma < pi/r");
    }

    // |zeta> = e^{-i zeta G} |psi>.
    const StateVector zeta_state = apply_unitary(psi, gate_g.matrix(zeta));

    // Component of e^{-i gamma F}|zeta> orthogonal to |zeta>.
    const Vector shifted_f = apply_unitary(zeta_state, gate_f.matrix(gamma)).amplitudes();
    const Complex overlap = zeta_state.amplitudes().dot(shifted_f);
    Vector perp = shifted_f - overlap * zeta_state.amplitudes();
    const double c_perp = perp.norm();
    if (options.enforce_conditions && c_perp <= tol::kCounterexampleOverlap) {
        throw ConditionViolationError("orthogonal component vanishes, |c_perp| = " +
                                      std::to_string(c_perp));
    }
    if (c_perp <= 1e-14) {
        throw ConditionViolationError("|c_perp| is numerically zero; observable "
                                      "correction is undefined");
    }
    perp /= c_perp;

    // <zeta|[G - F, A]|zeta> is purely imaginary; its modulus is the
    // derivative gap the construction is built to exhibit.
    const double deriv_g = commutator_derivative(zeta_state, gate_g.generator(), observable);
    const double deriv_f = commutator_derivative(zeta_state, gate_f.generator(), observable);
    const double gap = std::abs(deriv_g - deriv_f);
    if (options.enforce_conditions && gap <= tol::kCounterexampleOverlap) {
        throw ConditionViolationError("commutator expectation <zeta|[G-F, A]|zeta> "
                                      "vanishes, modulus = " + std::to_string(gap));
    }

    // B = A + [(f(zeta+gamma) - <A>_{e^{-i gamma F}|zeta>}) / |c_perp|^2] P_perp.
    // The correction moves <B> at e^{-i gamma F}|zeta> from a_F up to a_G,
    // which is what makes f~(zeta+gamma) = f(zeta+gamma).
    const StateVector shifted_g = apply_unitary(zeta_state, gate_g.matrix(gamma));
    const double a_through_g = expectation(shifted_g, observable);
    const double a_through_f =
        expectation(StateVector(shifted_f), observable);
    const double correction = (a_through_g - a_through_f) / (c_perp * c_perp);
    Matrix b = observable.matrix() + correction * (perp * perp.adjoint());
    HermitianOperator observable_b((std::move(b)));

    // f(theta) = <psi| e^{i theta G} A e^{-i theta G} |psi>.
    auto circuit_f = std::make_shared<const ParameterizedCircuit>(
        psi.num_qubits(), std::vector<CircuitOp>{ParamOp{gate_g, 0}}, psi, observable);
    SingleComponentFunction f(circuit_f, {zeta}, 0);

    // f~(theta) = <zeta| e^{i (theta - zeta) F} B e^{-i (theta - zeta) F} |zeta>,
    // realized as the circuit e^{-i theta F} e^{i zeta F} |zeta>.
    auto circuit_ft = std::make_shared<const ParameterizedCircuit>(
        psi.num_qubits(),
        std::vector<CircuitOp>{FixedOp{gate_f.matrix(-zeta)}, ParamOp{gate_f, 0}},
        zeta_state, observable_b);
    SingleComponentFunction f_tilde(circuit_ft, {zeta}, 0);

    return CounterexamplePair{std::move(f),
                              std::move(f_tilde),
                              zeta,
                              gamma,
                              c_perp,
                              gap,
                              gate_g.generator(),
                              gate_f.generator(),
                              observable,
                              std::move(observable_b),
                              zeta_state};
}

CounterexamplePair build_default(double zeta, double gamma) {
    const HermitianOperator g = pauli_string("X");
    const HermitianOperator f = HermitianOperator(
        (pauli_string("Y").matrix() + pauli_string("Z").matrix()) / std::sqrt(2.0));
    const HermitianOperator a = pauli_string("Y");
    // |psi> = e^{i zeta X} |0>, so that |zeta> = |0>.
    const StateVector psi =
        apply_unitary(StateVector::zero_state(1), RGate::make(g).matrix(-zeta));
    return build_custom(g, f, a, psi, zeta, gamma);
}

NogoReport verify(const CounterexamplePair &pair) {
    NogoReport report;
    report.value_gap_at_zeta = std::abs(pair.f(pair.zeta) - pair.f_tilde(pair.zeta));
    report.value_gap_at_zeta_plus_gamma =
        std::abs(pair.f(pair.zeta + pair.gamma) - pair.f_tilde(pair.zeta + pair.gamma));

    report.f_prime_commutator =
        commutator_derivative(pair.zeta_state, pair.generator_g, pair.observable_a);
    report.f_tilde_prime_commutator =
        commutator_derivative(pair.zeta_state, pair.generator_f, pair.observable_a);

    report.f_prime_oracle = TrigPoly::fit(pair.f).derivative(1)(pair.zeta);
    report.f_tilde_prime_oracle = TrigPoly::fit(pair.f_tilde).derivative(1)(pair.zeta);

    report.derivative_gap = std::abs(report.f_prime_oracle - report.f_tilde_prime_oracle);
    return report;
}

}  // namespace gradshift
