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
 * Single-component gradient rules for r-gate cost functions.
 *
 * Everything here is an instance of one master identity: for any f whose
 * parameter is driven by an r-gate,
 *
 *   r [ f(t + g1) - f(t - g2) ]
 *       = (sin(2r g1) + sin(2r g2))/2 * f'(t)
 *         - (cos(2r g1) - cos(2r g2))/(4r) * f''(t),
 *
 * so every two-point rule delivers an exact linear combination of the first
 * and second derivative. The centered shift rule (g1 = g2) isolates f';
 * finite differences are the same evaluations with a different prefactor,
 * which is where their closed-form bias and variance come from.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradshift/circuit.hpp"
#include "gradshift/trig_poly.hpp"

namespace gradshift {

enum class RuleKind { kGpsr, kCpsr, kCfd, kBfd, kFfd, kSecondDerivative };

std::string to_string(RuleKind kind);
RuleKind rule_kind_from_string(const std::string &name);

struct ShiftTerm {
    double offset;
    double weight;
};

/// A rule as data: its exact value is sum_k weight_k * f(t + offset_k),
/// and its single-shot estimator replaces each evaluation by one
/// Born-rule sample.
struct GradientRuleSpec {
    RuleKind kind;
    std::vector<ShiftTerm> shifts;
    double r;

    static GradientRuleSpec gpsr(double r, double gamma1, double gamma2);
    static GradientRuleSpec cpsr(double r, double gamma);
    static GradientRuleSpec cfd(double r, double h);
    static GradientRuleSpec bfd(double r, double h);
    static GradientRuleSpec ffd(double r, double h);
    static GradientRuleSpec second_derivative(double r);

    /// sum_k weight_k * f(theta + offset_k), evaluated exactly.
    double apply(const SingleComponentFunction &f, double theta) const;
};

/// Coefficients (a, b) with rule = a f' + b f''.
struct RuleDecomposition {
    double a;
    double b;
};

/// r [ f(theta + gamma1) - f(theta - gamma2) ].
double g_gpsr(const SingleComponentFunction &f, double theta, double gamma1, double gamma2);

/// a = (sin(2r g1) + sin(2r g2))/2, b = -(cos(2r g1) - cos(2r g2))/(4r).
RuleDecomposition decompose(double gamma1, double gamma2, double r);

/// Exact first derivative r [f(theta+gamma) - f(theta-gamma)] / sin(2r gamma).
/// Throws SingularShiftError when |sin(2r gamma)| <= tol::kSingularShift
/// (gamma at an integer multiple of pi/(2r)).
double g_cpsr(const SingleComponentFunction &f, double theta, double gamma);

/// [f(theta+h) - f(theta-h)] / (2h).
double g_cfd(const SingleComponentFunction &f, double theta, double h);
/// [f(theta) - f(theta-h)] / h.
double g_bfd(const SingleComponentFunction &f, double theta, double h);
/// [f(theta+h) - f(theta)] / h.
double g_ffd(const SingleComponentFunction &f, double theta, double h);

/// Exact f''(theta) = 2r * g_gpsr(theta, pi/(2r), 0).
double second_derivative(const SingleComponentFunction &f, double theta);

/// Exact n-th derivative, n >= 1, via f^{(n+2)} = -(2r)^2 f^{(n)}: reduce
/// to n in {1, 2}, evaluate with the centered rule or the second-derivative
/// rule, and scale by (-(2r)^2)^k.
double higher_derivative(const SingleComponentFunction &f, double theta, int order);

/// Closed-form bias of the finite-difference estimators:
///   cFD:  [sin(2rh)/(2rh) - 1] f'(theta)
///   bFD:  same f' term - (1 - cos(2rh))/(4 r^2 h) f''(theta)
///   fFD:  same f' term + (1 - cos(2rh))/(4 r^2 h) f''(theta)
/// with f', f'' taken from the trig-poly oracle. Centered-rule kinds have
/// zero bias. Throws ZeroStepError for |h| <= tol::kZeroStep.
double bias_closed_form(RuleKind kind, const SingleComponentFunction &f, double theta,
                        double h);

/// Variance of the rule estimator with `shots` Born samples per evaluation
/// point: sum_k weight_k^2 sigma_1^2(theta + offset_k) / shots.
double variance_closed_form(const GradientRuleSpec &rule, const SingleComponentFunction &f,
                            double theta, std::int64_t shots = 1);
double variance_closed_form(RuleKind kind, const SingleComponentFunction &f, double theta,
                            double step, std::int64_t shots = 1);

/// Shot-based rule estimate: every evaluation point is sampled with
/// `shots_per_eval` Born draws on its own substream of `seed`. The result's
/// sample_variance estimates the single-shot rule variance
/// sum_k w_k^2 sigma_1^2; dividing it by shots_per_eval gives the variance
/// of `mean`.
EstimatorResult estimate(const GradientRuleSpec &rule, const SingleComponentFunction &f,
                         double theta, std::int64_t shots_per_eval, std::uint64_t seed);
EstimatorResult estimate(const GradientRuleSpec &rule, const CircuitPtr &circuit,
                         const std::vector<double> &theta, int component,
                         std::int64_t shots_per_eval, std::uint64_t seed);

/// Empirical mean/variance of `reps` independent single-shot rule estimates,
/// with the Born distributions at the shifted points computed once.
EstimatorResult monte_carlo_single_shot(const GradientRuleSpec &rule,
                                        const SingleComponentFunction &f, double theta,
                                        std::int64_t reps, std::uint64_t seed);

struct GradientOptions {
    RuleKind kind = RuleKind::kCpsr;
    /// gamma (shift rules) or h (finite differences); component-wise
    /// defaults pi/(4 r_i) and 0.05 / r_i when unset.
    std::optional<double> step;
    /// 0 = exact expectation values, > 0 = sampled.
    std::int64_t shots_per_eval = 0;
    std::uint64_t seed = 0;
};

struct GradientResult {
    std::vector<double> gradient;
    /// Circuit evaluations consumed: 2n for centered rules, n+1 for the
    /// one-sided differences (the unshifted point is shared).
    std::int64_t evaluations = 0;
};

/// Full gradient, one single-component rule per parameter.
GradientResult full_gradient(const CircuitPtr &circuit, const std::vector<double> &theta,
                             const GradientOptions &options = {});

}  // namespace gradshift
