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

#include "gradshift/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "gradshift/errors.hpp"
#include "gradshift/rng.hpp"

namespace gradshift {

ShotSampler::ShotSampler(const Spectrum &spectrum, const StateVector &state) {
    const std::size_t k = spectrum.eigenvalues.size();
    eigenvalues_ = spectrum.eigenvalues;
    std::vector<double> probs(k);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Complex p = state.amplitudes().dot(spectrum.projectors[i] * state.amplitudes());
        probs[i] = std::clamp(p.real(), 0.0, 1.0);
        sum += probs[i];
    }
    if (std::abs(sum - 1.0) > tol::kProbabilitySum) {
        throw ConsistencyError("Born probabilities sum to " + std::to_string(sum));
    }
    cdf_.resize(k);
    double acc = 0.0;
    double ev = 0.0;
    double ev2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        probs[i] /= sum;
        acc += probs[i];
        cdf_[i] = acc;
        ev += probs[i] * eigenvalues_[i];
        ev2 += probs[i] * eigenvalues_[i] * eigenvalues_[i];
    }
    cdf_.back() = 1.0;
    mean_ = ev;
    variance_ = std::max(ev2 - ev * ev, 0.0);
}

double ShotSampler::sample(std::uint64_t seed, std::uint64_t index) const {
    const double u = rng::uniform(seed, index);
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t k = std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
    return eigenvalues_[k];
}

EstimatorResult ShotSampler::run(std::int64_t shots, std::uint64_t seed) const {
    if (shots < 1) {
        throw DimensionError("shot count must be >= 1");
    }
    // Welford accumulation, sequential in the shot counter; each draw only
    // depends on (seed, k) so the values themselves are order-independent.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t k = 0; k < shots; ++k) {
        const double x = sample(seed, static_cast<std::uint64_t>(k));
        const double delta = x - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (x - mean);
    }
    EstimatorResult result;
    result.mean = mean;
    result.sample_variance = shots > 1 ? m2 / static_cast<double>(shots - 1) : 0.0;
    result.shots = shots;
    result.seed = seed;
    return result;
}

}  // namespace gradshift
