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

#include "gradshift/grad_rules.hpp"

#include <cmath>
#include <numbers>

#include "gradshift/errors.hpp"
#include "gradshift/rng.hpp"

namespace gradshift {

namespace {

constexpr std::uint64_t kSharedPointSalt = 0x5a17ed00fULL;

void check_step(double h) {
    if (std::abs(h) <= tol::kZeroStep) {
        throw ZeroStepError("finite-difference step is zero");
    }
}

double check_shift(double r, double gamma) {
    const double s = std::sin(2.0 * r * gamma);
    if (std::abs(s) <= tol::kSingularShift) {
        throw SingularShiftError("sin(2 r gamma) = " + std::to_string(s) +
                                 " at gamma = " + std::to_string(gamma) +
                                 "; shift must avoid multiples of pi/(2r)");
    }
    return s;
}

}  // namespace

std::string to_string(RuleKind kind) {
    switch (kind) {
    case RuleKind::kGpsr:
        return "gpsr";
    case RuleKind::kCpsr:
        return "cpsr";
    case RuleKind::kCfd:
        return "cfd";
    case RuleKind::kBfd:
        return "bfd";
    case RuleKind::kFfd:
        return "ffd";
    case RuleKind::kSecondDerivative:
        return "d2";
    }
    return "unknown";
}

RuleKind rule_kind_from_string(const std::string &name) {
    if (name == "gpsr") return RuleKind::kGpsr;
    if (name == "cpsr") return RuleKind::kCpsr;
    if (name == "cfd") return RuleKind::kCfd;
    if (name == "bfd") return RuleKind::kBfd;
    if (name == "ffd") return RuleKind::kFfd;
    if (name == "d2") return RuleKind::kSecondDerivative;
    throw ConfigError("unknown rule kind '" + name + "'");
}

GradientRuleSpec GradientRuleSpec::gpsr(double r, double gamma1, double gamma2) {
    return {RuleKind::kGpsr, {{gamma1, r}, {-gamma2, -r}}, r};
}

GradientRuleSpec GradientRuleSpec::cpsr(double r, double gamma) {
    const double s = check_shift(r, gamma);
    return {RuleKind::kCpsr, {{gamma, r / s}, {-gamma, -r / s}}, r};
}

GradientRuleSpec GradientRuleSpec::cfd(double r, double h) {
    check_step(h);
    return {RuleKind::kCfd, {{h, 1.0 / (2.0 * h)}, {-h, -1.0 / (2.0 * h)}}, r};
}

GradientRuleSpec GradientRuleSpec::bfd(double r, double h) {
    check_step(h);
    return {RuleKind::kBfd, {{0.0, 1.0 / h}, {-h, -1.0 / h}}, r};
}

GradientRuleSpec GradientRuleSpec::ffd(double r, double h) {
    check_step(h);
    return {RuleKind::kFfd, {{h, 1.0 / h}, {0.0, -1.0 / h}}, r};
}

GradientRuleSpec GradientRuleSpec::second_derivative(double r) {
    const double half_period = std::numbers::pi / (2.0 * r);
    return {RuleKind::kSecondDerivative, {{half_period, 2.0 * r * r}, {0.0, -2.0 * r * r}}, r};
}

double GradientRuleSpec::apply(const SingleComponentFunction &f, double theta) const {
    double acc = 0.0;
    for (const ShiftTerm &term : shifts) {
        acc += term.weight * f(theta + term.offset);
    }
    return acc;
}

double g_gpsr(const SingleComponentFunction &f, double theta, double gamma1, double gamma2) {
    return f.r() * (f(theta + gamma1) - f(theta - gamma2));
}

RuleDecomposition decompose(double gamma1, double gamma2, double r) {
    const double a = (std::sin(2.0 * r * gamma1) + std::sin(2.0 * r * gamma2)) / 2.0;
    const double b = -(std::cos(2.0 * r * gamma1) - std::cos(2.0 * r * gamma2)) / (4.0 * r);
    return {a, b};
}

double g_cpsr(const SingleComponentFunction &f, double theta, double gamma) {
    const double s = check_shift(f.r(), gamma);
    return f.r() * (f(theta + gamma) - f(theta - gamma)) / s;
}

double g_cfd(const SingleComponentFunction &f, double theta, double h) {
    check_step(h);
    return (f(theta + h) - f(theta - h)) / (2.0 * h);
}

double g_bfd(const SingleComponentFunction &f, double theta, double h) {
    check_step(h);
    return (f(theta) - f(theta - h)) / h;
}

double g_ffd(const SingleComponentFunction &f, double theta, double h) {
    check_step(h);
    return (f(theta + h) - f(theta)) / h;
}

double second_derivative(const SingleComponentFunction &f, double theta) {
    const double r = f.r();
    return 2.0 * r * g_gpsr(f, theta, std::numbers::pi / (2.0 * r), 0.0);
}

double higher_derivative(const SingleComponentFunction &f, double theta, int order) {
    if (order < 1) {
        throw ValidationError("derivative order must be >= 1; use evaluate for order 0");
    }
    const double r = f.r();
    const int base_order = (order % 2 == 1) ? 1 : 2;
    const int reductions = (order - base_order) / 2;

    double value = base_order == 1 ? g_cpsr(f, theta, std::numbers::pi / (4.0 * r))
                                   : second_derivative(f, theta);
    for (int k = 0; k < reductions; ++k) {
        value *= -4.0 * r * r;
    }
    return value;
}

double bias_closed_form(RuleKind kind, const SingleComponentFunction &f, double theta,
                        double h) {
    const double r = f.r();
    const TrigPoly poly = TrigPoly::fit(f);
    const double f1 = poly.derivative(1)(theta);
    const double f2 = poly.derivative(2)(theta);

    switch (kind) {
    case RuleKind::kCpsr:
        return 0.0;  // exact rule
    case RuleKind::kCfd:
        check_step(h);
        return (std::sin(2.0 * r * h) / (2.0 * r * h) - 1.0) * f1;
    case RuleKind::kBfd:
    case RuleKind::kFfd: {
        check_step(h);
        const double first = (std::sin(2.0 * r * h) / (2.0 * r * h) - 1.0) * f1;
        const double second = (1.0 - std::cos(2.0 * r * h)) / (4.0 * r * r * h) * f2;
        return kind == RuleKind::kBfd ? first - second : first + second;
    }
    default:
        throw ValidationError("bias relative to f' is defined for cpsr/cfd/bfd/ffd only");
    }
}

double variance_closed_form(const GradientRuleSpec &rule, const SingleComponentFunction &f,
                            double theta, std::int64_t shots) {
    if (shots < 1) {
        throw DimensionError("shot count must be >= 1");
    }
    double acc = 0.0;
    for (const ShiftTerm &term : rule.shifts) {
        acc += term.weight * term.weight * f.one_shot_variance(theta + term.offset);
    }
    return acc / static_cast<double>(shots);
}

double variance_closed_form(RuleKind kind, const SingleComponentFunction &f, double theta,
                            double step, std::int64_t shots) {
    const double r = f.r();
    switch (kind) {
    case RuleKind::kCpsr:
        return variance_closed_form(GradientRuleSpec::cpsr(r, step), f, theta, shots);
    case RuleKind::kCfd:
        return variance_closed_form(GradientRuleSpec::cfd(r, step), f, theta, shots);
    case RuleKind::kBfd:
        return variance_closed_form(GradientRuleSpec::bfd(r, step), f, theta, shots);
    case RuleKind::kFfd:
        return variance_closed_form(GradientRuleSpec::ffd(r, step), f, theta, shots);
    case RuleKind::kSecondDerivative:
        return variance_closed_form(GradientRuleSpec::second_derivative(r), f, theta, shots);
    default:
        throw ValidationError("use the GradientRuleSpec overload for the generalized rule");
    }
}

EstimatorResult estimate(const GradientRuleSpec &rule, const SingleComponentFunction &f,
                         double theta, std::int64_t shots_per_eval, std::uint64_t seed) {
    if (shots_per_eval < 1) {
        throw DimensionError("shots per evaluation must be >= 1");
    }
    EstimatorResult combined;
    combined.shots = shots_per_eval;
    combined.seed = seed;
    for (std::size_t k = 0; k < rule.shifts.size(); ++k) {
        const ShiftTerm &term = rule.shifts[k];
        const EstimatorResult point = f.sample_n_shots(
            theta + term.offset, shots_per_eval, rng::substream(seed, k));
        combined.mean += term.weight * point.mean;
        combined.sample_variance += term.weight * term.weight * point.sample_variance;
    }
    return combined;
}

EstimatorResult estimate(const GradientRuleSpec &rule, const CircuitPtr &circuit,
                         const std::vector<double> &theta, int component,
                         std::int64_t shots_per_eval, std::uint64_t seed) {
    const SingleComponentFunction f(circuit, theta, component);
    return estimate(rule, f, theta[component], shots_per_eval, seed);
}

EstimatorResult monte_carlo_single_shot(const GradientRuleSpec &rule,
                                        const SingleComponentFunction &f, double theta,
                                        std::int64_t reps, std::uint64_t seed) {
    if (reps < 1) {
        throw DimensionError("repetition count must be >= 1");
    }
    std::vector<ShotSampler> samplers;
    std::vector<std::uint64_t> streams;
    samplers.reserve(rule.shifts.size());
    for (std::size_t k = 0; k < rule.shifts.size(); ++k) {
        samplers.push_back(f.sampler(theta + rule.shifts[k].offset));
        streams.push_back(rng::substream(seed, k));
    }
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t j = 0; j < reps; ++j) {
        double x = 0.0;
        for (std::size_t k = 0; k < rule.shifts.size(); ++k) {
            x += rule.shifts[k].weight *
                 samplers[k].sample(streams[k], static_cast<std::uint64_t>(j));
        }
        const double delta = x - mean;
        mean += delta / static_cast<double>(j + 1);
        m2 += delta * (x - mean);
    }
    EstimatorResult result;
    result.mean = mean;
    result.sample_variance = reps > 1 ? m2 / static_cast<double>(reps - 1) : 0.0;
    result.shots = reps;
    result.seed = seed;
    return result;
}

GradientResult full_gradient(const CircuitPtr &circuit, const std::vector<double> &theta,
                             const GradientOptions &options) {
    const int n = circuit->num_params();
    if (static_cast<int>(theta.size()) != n) {
        throw DimensionError("parameter vector length does not match circuit");
    }
    const bool one_sided = options.kind == RuleKind::kBfd || options.kind == RuleKind::kFfd;
    if (options.kind != RuleKind::kCpsr && options.kind != RuleKind::kCfd && !one_sided) {
        throw ValidationError("full gradient supports cpsr, cfd, bfd and ffd");
    }

    GradientResult result;
    result.gradient.resize(n);

    // One-sided rules share the unshifted evaluation across all components.
    double shared_value = 0.0;
    if (one_sided) {
        if (options.shots_per_eval > 0) {
            shared_value = sample_n_shots(*circuit, theta, options.shots_per_eval,
                                          rng::substream(options.seed, kSharedPointSalt))
                               .mean;
        } else {
            shared_value = circuit->evaluate(theta);
        }
        result.evaluations += 1;
    }

    for (int i = 0; i < n; ++i) {
        const SingleComponentFunction f(circuit, theta, i);
        const double r = f.r();
        const double t0 = theta[i];

        double shifted_step;
        switch (options.kind) {
        case RuleKind::kCpsr:
            shifted_step = options.step.value_or(std::numbers::pi / (4.0 * r));
            break;
        default:
            shifted_step = options.step.value_or(0.05 / r);
            break;
        }

        if (options.shots_per_eval > 0) {
            const std::uint64_t stream = rng::substream(options.seed, i + 1);
            if (options.kind == RuleKind::kCpsr || options.kind == RuleKind::kCfd) {
                const GradientRuleSpec rule = options.kind == RuleKind::kCpsr
                                                  ? GradientRuleSpec::cpsr(r, shifted_step)
                                                  : GradientRuleSpec::cfd(r, shifted_step);
                result.gradient[i] =
                    estimate(rule, f, t0, options.shots_per_eval, stream).mean;
                result.evaluations += 2;
            } else {
                check_step(shifted_step);
                const double t_shift =
                    options.kind == RuleKind::kBfd ? t0 - shifted_step : t0 + shifted_step;
                const double m =
                    f.sample_n_shots(t_shift, options.shots_per_eval, stream).mean;
                result.gradient[i] = options.kind == RuleKind::kBfd
                                         ? (shared_value - m) / shifted_step
                                         : (m - shared_value) / shifted_step;
                result.evaluations += 1;
            }
        } else {
            switch (options.kind) {
            case RuleKind::kCpsr:
                result.gradient[i] = g_cpsr(f, t0, shifted_step);
                result.evaluations += 2;
                break;
            case RuleKind::kCfd:
                result.gradient[i] = g_cfd(f, t0, shifted_step);
                result.evaluations += 2;
                break;
            case RuleKind::kBfd:
                check_step(shifted_step);
                result.gradient[i] = (shared_value - f(t0 - shifted_step)) / shifted_step;
                result.evaluations += 1;
                break;
            default:
                check_step(shifted_step);
                result.gradient[i] = (f(t0 + shifted_step) - shared_value) / shifted_step;
                result.evaluations += 1;
                break;
            }
        }
    }
    return result;
}

}  // namespace gradshift
