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

#include "gradshift/rgate.hpp"

#include <cmath>

#include "gradshift/errors.hpp"

namespace gradshift {

RGate::RGate(HermitianOperator generator, double r, bool was_centered)
    : generator_(std::move(generator)), r_(r), was_centered_(was_centered) {}

RGate RGate::make(const HermitianOperator &generator, double tol) {
    const Spectrum spectrum = eigendecompose(generator, tol);
    if (spectrum.eigenvalues.size() != 2) {
        throw RGateValidationError("generator has " +
                                   std::to_string(spectrum.eigenvalues.size()) +
                                   " distinct eigenvalue(s), need exactly 2");
    }
    const double e_low = spectrum.eigenvalues[0];
    const double e_high = spectrum.eigenvalues[1];
    const double r = (e_high - e_low) / 2.0;
    const double center = (e_high + e_low) / 2.0;

    const double center_threshold = tol * std::max(std::abs(e_high), std::abs(e_low));
    const bool needs_centering = std::abs(center) > center_threshold;

    Matrix g = generator.matrix();
    if (needs_centering) {
        g -= center * Matrix::Identity(g.rows(), g.cols());
    }
    HermitianOperator centered(std::move(g));

    const Matrix square_defect =
        centered.matrix() * centered.matrix() - (r * r) * Matrix::Identity(centered.dim(), centered.dim());
    if (max_abs(square_defect) > tol::kRGateSquare) {
        throw RGateValidationError("centered generator violates G^2 = r^2 1 by " +
                                   std::to_string(max_abs(square_defect)));
    }
    return RGate(std::move(centered), r, needs_centering);
}

UnitaryMatrix RGate::matrix(double theta) const {
    const double c = std::cos(r_ * theta);
    const double s = std::sin(r_ * theta);
    Matrix u = c * Matrix::Identity(dim(), dim()) -
               Complex(0, 1) * (s / r_) * generator_.matrix();
    return UnitaryMatrix(std::move(u));
}

}  // namespace gradshift
