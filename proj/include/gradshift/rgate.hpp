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

#include "gradshift/linalg.hpp"
#include "gradshift/tolerances.hpp"

namespace gradshift {

/// A rotation gate exp(-i theta G) whose generator has exactly two distinct
/// eigenvalues +-r. Generators with an asymmetric spectrum {e0, e1} are
/// centered by subtracting (e0+e1)/2 * 1, which only changes the gate by a
/// global phase and leaves every expectation value untouched.
class RGate {
  public:
    /// Validates and (if needed) centers `generator`. Throws
    /// RGateValidationError naming the eigenvalue count when the generator
    /// does not have exactly two distinct eigenvalues at tolerance `tol`.
    static RGate make(const HermitianOperator &generator,
                      double tol = tol::kDegeneracyMerge);

    /// cos(r theta) 1 - i (G/r) sin(r theta); theta may be any real number.
    UnitaryMatrix matrix(double theta) const;

    const HermitianOperator &generator() const { return generator_; }
    double r() const { return r_; }
    bool was_centered() const { return was_centered_; }
    Eigen::Index dim() const { return generator_.dim(); }

  private:
    RGate(HermitianOperator generator, double r, bool was_centered);

    HermitianOperator generator_;  // centered, G^2 = r^2 1
    double r_;
    bool was_centered_;
};

}  // namespace gradshift
