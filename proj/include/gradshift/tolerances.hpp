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

namespace gradshift::tol {

// All numerical tolerances live here. Everything downstream (validation,
// singularity guards, oracle residuals) references these constants.

inline constexpr double kHermiticity = 1e-12;     // max-entry |A - A^dag|
inline constexpr double kUnitarity = 1e-12;       // max-entry |U^dag U - 1|
inline constexpr double kStateNorm = 1e-12;       // | ||psi|| - 1 |
inline constexpr double kNormDrift = 1e-10;       // pre-renormalization drift after a matvec
inline constexpr double kProjector = 1e-10;       // idempotence / orthogonality / completeness
inline constexpr double kReconstruction = 1e-10;  // || sum_k lambda_k P_k - A ||_max
inline constexpr double kDegeneracyMerge = 1e-9;  // eigenvalue merge, relative to spectral norm
inline constexpr double kRGateSquare = 1e-10;     // || G^2 - r^2 1 ||_max after centering
inline constexpr double kImaginaryPart = 1e-12;   // Im of an expectation value
inline constexpr double kProbabilitySum = 1e-10;  // | sum_k p_k - 1 |
inline constexpr double kOracleResidual = 1e-10;  // trig-poly fit residual
inline constexpr double kSingularShift = 1e-9;    // |sin(2 r gamma)| guard for the centered rule
inline constexpr double kZeroStep = 1e-12;        // |h| guard for finite differences
inline constexpr double kCounterexampleOverlap = 1e-8;  // |c_perp| and commutator conditions

}  // namespace gradshift::tol
