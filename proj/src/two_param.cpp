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

#include "gradshift/two_param.hpp"

#include <cmath>
#include <numbers>

#include "gradshift/errors.hpp"
#include "gradshift/grad_rules.hpp"

namespace gradshift {

TwoParamFunction::TwoParamFunction(CircuitPtr circuit, std::vector<double> base_point,
                                   int i, int j)
    : circuit_(std::move(circuit)), base_point_(std::move(base_point)), i_(i), j_(j) {
    if (i_ == j_) {
        throw DimensionError("the two components must differ");
    }
    if (circuit_->num_params() < 2) {
        throw DimensionError("two-parameter restriction needs at least two parameters");
    }
    if (static_cast<int>(base_point_.size()) != circuit_->num_params()) {
        throw DimensionError("base point length does not match parameter count");
    }
    r1_ = circuit_->param_r(i_);
    r2_ = circuit_->param_r(j_);
}

double TwoParamFunction::operator()(double t1, double t2) const {
    std::vector<double> theta = base_point_;
    theta[i_] = t1;
    theta[j_] = t2;
    return circuit_->evaluate(theta);
}

SingleComponentFunction TwoParamFunction::slice_first(double t2_fixed) const {
    std::vector<double> theta = base_point_;
    theta[j_] = t2_fixed;
    return SingleComponentFunction(circuit_, std::move(theta), i_);
}

SingleComponentFunction TwoParamFunction::slice_second(double t1_fixed) const {
    std::vector<double> theta = base_point_;
    theta[i_] = t1_fixed;
    return SingleComponentFunction(circuit_, std::move(theta), j_);
}

double nested_cpsr_mixed(const TwoParamFunction &f2, double t1, double t2, double gamma1,
                         double gamma2, bool t1_outer) {
    const double s1 = std::sin(2.0 * f2.r1() * gamma1);
    const double s2 = std::sin(2.0 * f2.r2() * gamma2);
    if (std::abs(s1) <= tol::kSingularShift || std::abs(s2) <= tol::kSingularShift) {
        throw SingularShiftError("nested rule hit a singular shift");
    }
    if (t1_outer) {
        // Outer rule in t1 applied to the exact inner derivative in t2.
        const auto inner = [&](double u1) {
            return f2.r2() * (f2(u1, t2 + gamma2) - f2(u1, t2 - gamma2)) / s2;
        };
        return f2.r1() * (inner(t1 + gamma1) - inner(t1 - gamma1)) / s1;
    }
    const auto inner = [&](double u2) {
        return f2.r1() * (f2(t1 + gamma1, u2) - f2(t1 - gamma1, u2)) / s1;
    };
    return f2.r2() * (inner(t2 + gamma2) - inner(t2 - gamma2)) / s2;
}

Eigen::Matrix2d hessian_2x2(const TwoParamFunction &f2, double t1, double t2) {
    const double gamma1 = std::numbers::pi / (4.0 * f2.r1());
    const double gamma2 = std::numbers::pi / (4.0 * f2.r2());

    Eigen::Matrix2d h;
    h(0, 0) = second_derivative(f2.slice_first(t2), t1);
    h(1, 1) = second_derivative(f2.slice_second(t1), t2);
    h(0, 1) = nested_cpsr_mixed(f2, t1, t2, gamma1, gamma2, /*t1_outer=*/true);
    h(1, 0) = nested_cpsr_mixed(f2, t1, t2, gamma1, gamma2, /*t1_outer=*/false);
    return h;
}

Eigen::Matrix2d hessian_2x2_fd(const TwoParamFunction &f2, double t1, double t2,
                               double step) {
    const double s = step;
    const double center = f2(t1, t2);
    Eigen::Matrix2d h;
    h(0, 0) = (f2(t1 + s, t2) - 2.0 * center + f2(t1 - s, t2)) / (s * s);
    h(1, 1) = (f2(t1, t2 + s) - 2.0 * center + f2(t1, t2 - s)) / (s * s);
    const double mixed = (f2(t1 + s, t2 + s) - f2(t1 + s, t2 - s) - f2(t1 - s, t2 + s) +
                          f2(t1 - s, t2 - s)) /
                         (4.0 * s * s);
    h(0, 1) = mixed;
    h(1, 0) = mixed;
    return h;
}

IdentityResidualReport check_discussion_identity(const TwoParamFunction &f2, double t1,
                                                 double t2, double gamma1, double gamma2,
                                                 ShiftReading reading) {
    const double r = f2.r1();
    if (std::abs(f2.r2() - r) > 1e-9 * std::max(r, f2.r2())) {
        throw ValidationError("the identity requires a single r shared by both gates");
    }
    const double third_shift =
        reading == ShiftReading::kLiteral ? std::numbers::pi / 2.0
                                          : std::numbers::pi / (2.0 * r);

    const double sin1 = std::sin(r * gamma1);
    const double sin2 = std::sin(r * gamma2);
    const double lhs = f2(t1 + gamma1, t2 + gamma2) + f2(t1 - gamma1, t2 - gamma2) -
                       2.0 * sin1 * sin1 * sin2 * sin2 *
                           f2(t1 + third_shift, t2 + third_shift);

    const Eigen::Matrix2d h = hessian_2x2(f2, t1, t2);
    const double cos1 = std::cos(r * gamma1);
    const double cos2 = std::cos(r * gamma2);
    const double rhs = 2.0 * std::sin(2.0 * r * gamma1) * std::sin(2.0 * r * gamma2) * h(0, 1) +
                       0.25 * cos2 * cos2 * (5.0 - 3.0 * std::cos(2.0 * r * gamma1)) * h(0, 0) +
                       0.25 * cos1 * cos1 * (5.0 - 3.0 * std::cos(2.0 * r * gamma2)) * h(1, 1);

    IdentityResidualReport report;
    report.lhs = lhs;
    report.rhs = rhs;
    report.residual = std::abs(lhs - rhs);
    report.t1 = t1;
    report.t2 = t2;
    report.gamma1 = gamma1;
    report.gamma2 = gamma2;
    report.reading = reading;
    report.mixed_partial = h(0, 1);
    report.d2_first = h(0, 0);
    report.d2_second = h(1, 1);
    return report;
}

}  // namespace gradshift
