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

#include <functional>

#include "gradshift/circuit.hpp"

namespace gradshift {

/// Exact representation t -> a0 + a1 cos(2rt) + b1 sin(2rt) of an r-gate
/// parameterized expectation value. Because G^2 = r^2 1, every such cost
/// function is a degree-1 trigonometric polynomial in 2rt, so three samples
/// determine it completely and derivatives of all orders are analytic.
/// This is the independent ground truth the shift rules are checked against.
class TrigPoly {
  public:
    TrigPoly(double a0, double a1, double b1, double r);

    /// Fits the three coefficients from samples at t in {0, pi/(4r),
    /// pi/(2r)} and verifies the fit at 8 quasi-random points of a full
    /// period. Throws NotAnRGateFunction when a residual exceeds
    /// tol::kOracleResidual, which signals the function is not generated
    /// by a true r-gate.
    static TrigPoly fit(const std::function<double(double)> &f, double r);
    static TrigPoly fit(const SingleComponentFunction &f);

    /// Exact n-th analytic derivative; n = 0 returns *this.
    TrigPoly derivative(int order = 1) const;

    double operator()(double t) const;

    double a0() const { return a0_; }
    double a1() const { return a1_; }
    double b1() const { return b1_; }
    double r() const { return r_; }

  private:
    double a0_, a1_, b1_, r_;
};

}  // namespace gradshift
