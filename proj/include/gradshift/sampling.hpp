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

#include <cstdint>
#include <vector>

#include "gradshift/linalg.hpp"

namespace gradshift {

/// Outcome of an n-shot estimation. `sample_variance` is the unbiased
/// per-shot sample variance (0 when shots == 1); the variance of `mean`
/// is sample_variance / shots.
struct EstimatorResult {
    double mean = 0.0;
    double sample_variance = 0.0;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Born-rule distribution of an observable's eigenvalues at a fixed state.
/// Immutable once built; every shot is addressed by (seed, shot index), so
/// draws are order-independent and bit-reproducible.
class ShotSampler {
  public:
    /// Computes p_k = <psi|P_k|psi>, clips to [0, 1] and renormalizes.
    /// Throws ConsistencyError when |sum_k p_k - 1| > tol::kProbabilitySum.
    ShotSampler(const Spectrum &spectrum, const StateVector &state);

    /// Eigenvalue drawn by inverse CDF for shot `index` of stream `seed`.
    double sample(std::uint64_t seed, std::uint64_t index) const;

    /// sum_k p_k lambda_k, the exact mean of the distribution.
    double mean() const { return mean_; }

    /// sum_k p_k lambda_k^2 - mean^2, clipped to 0; the one-shot variance.
    double variance() const { return variance_; }

    /// Sample mean and unbiased sample variance over `shots` draws.
    EstimatorResult run(std::int64_t shots, std::uint64_t seed) const;

  private:
    std::vector<double> eigenvalues_;
    std::vector<double> cdf_;
    double mean_;
    double variance_;
};

}  // namespace gradshift
