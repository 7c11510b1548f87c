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
 * Constructive witness that no two-point forward/backward shift rule can
 * exist: a pair of r-gate cost functions that agree at zeta and zeta+gamma
 * but have different derivatives at zeta. Any rule combining only
 * f(zeta) and f(zeta+gamma) would have to map equal inputs to different
 * outputs for the two members of the pair.
 */

#pragma once

#include "gradshift/circuit.hpp"

namespace gradshift {

struct CounterexamplePair {
    SingleComponentFunction f;        // from generator G, observable A
    SingleComponentFunction f_tilde;  // from generator F, corrected observable B
    double zeta;
    double gamma;
    double c_perp_norm;
    double derivative_gap;

    // Construction data, kept for the two-route verification and reports.
    HermitianOperator generator_g;
    HermitianOperator generator_f;
    HermitianOperator observable_a;
    HermitianOperator observable_b;
    StateVector zeta_state;
};

struct NogoOptions {
    /// Test hook: when false, the genericity conditions are not enforced
    /// and a degenerate pair (e.g. F = G) can be built to demonstrate why
    /// the conditions matter.
    bool enforce_conditions = true;
};

/// The explicit instance G = X, F = (Y+Z)/sqrt(2), A = Y,
/// |psi> = e^{i zeta X}|0>. Requires 0 < gamma < pi.
CounterexamplePair build_default(double zeta, double gamma);

/// General construction from two r-gates with equal r, an observable and an
/// initial state. Throws ConditionViolationError naming the failed
/// genericity condition (vanishing orthogonal component, or vanishing
/// commutator expectation).
CounterexamplePair build_custom(const HermitianOperator &generator_g,
                                const HermitianOperator &generator_f,
                                const HermitianOperator &observable,
                                const StateVector &psi, double zeta, double gamma,
                                const NogoOptions &options = {});

struct NogoReport {
    double value_gap_at_zeta;
    double value_gap_at_zeta_plus_gamma;
    double derivative_gap;
    double f_prime_commutator;        // <zeta|[iG, A]|zeta>
    double f_tilde_prime_commutator;  // <zeta|[iF, A]|zeta>
    double f_prime_oracle;
    double f_tilde_prime_oracle;
};

/// Recomputes the agreement gaps and both derivatives two independent ways
/// (commutator form and trig-poly oracle).
NogoReport verify(const CounterexamplePair &pair);

}  // namespace gradshift
