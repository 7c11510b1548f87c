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

#include <Eigen/Dense>

#include "gradshift/circuit.hpp"

namespace gradshift {

/// Restriction of F to two components (i, j) of the base point.
class TwoParamFunction {
  public:
    TwoParamFunction(CircuitPtr circuit, std::vector<double> base_point, int i, int j);

    double operator()(double t1, double t2) const;

    /// t1 -> f(t1, t2_fixed) as a single-component function.
    SingleComponentFunction slice_first(double t2_fixed) const;
    /// t2 -> f(t1_fixed, t2) as a single-component function.
    SingleComponentFunction slice_second(double t1_fixed) const;

    double r1() const { return r1_; }
    double r2() const { return r2_; }
    int first_component() const { return i_; }
    int second_component() const { return j_; }
    const std::vector<double> &base_point() const { return base_point_; }
    const CircuitPtr &circuit() const { return circuit_; }

  private:
    CircuitPtr circuit_;
    std::vector<double> base_point_;
    int i_, j_;
    double r1_, r2_;
};

/// Mixed partial d^2 f / dt1 dt2 by nesting the centered shift rule, which
/// is exact on expectation values. `t1_outer` selects the nesting order;
/// both orders combine the same four evaluations and must agree.
double nested_cpsr_mixed(const TwoParamFunction &f2, double t1, double t2,
                         double gamma1, double gamma2, bool t1_outer = true);

/// 2x2 Hessian: diagonal from the exact second-derivative rule per axis,
/// off-diagonal from nested centered rules (both nesting orders, so the
/// symmetry of the result is a real check).
Eigen::Matrix2d hessian_2x2(const TwoParamFunction &f2, double t1, double t2);

/// 2x2 Hessian from second-order central finite differences; the
/// independent cross-check for hessian_2x2.
Eigen::Matrix2d hessian_2x2_fd(const TwoParamFunction &f2, double t1, double t2,
                               double step = 1e-3);

enum class ShiftReading {
    kLiteral,  // third evaluation shifted by pi/2, as printed
    kScaled,   // third evaluation shifted by pi/(2r)
};

/// Both sides of the two-parameter linear-combination identity
///   f(t1+g1, t2+g2) + f(t1-g1, t2-g2) - 2 sin^2(r g1) sin^2(r g2) f(t1+s, t2+s)
///   =? 2 sin(2r g1) sin(2r g2) d1 d2 f
///      + 1/4 cos^2(r g2) (5 - 3 cos(2r g1)) d1^2 f
///      + 1/4 cos^2(r g1) (5 - 3 cos(2r g2)) d2^2 f
/// evaluated as written. This reports; it does not assert the residual is 0.
struct IdentityResidualReport {
    double lhs;
    double rhs;
    double residual;
    double t1, t2, gamma1, gamma2;
    ShiftReading reading;
    double mixed_partial;
    double d2_first;
    double d2_second;
};

/// Requires both gates to share a single r. Throws ValidationError otherwise.
IdentityResidualReport check_discussion_identity(const TwoParamFunction &f2, double t1,
                                                 double t2, double gamma1, double gamma2,
                                                 ShiftReading reading = ShiftReading::kLiteral);

}  // namespace gradshift
