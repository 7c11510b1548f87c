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

namespace gradshift::rng {

// Counter-based pseudo-random numbers. The value at (seed, index) is a pure
// function of its arguments, so shot k of a batch can be drawn in any order,
// on any thread, and always reproduces bit-identically.

/// SplitMix64 finalizer; full 64-bit avalanche.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derive the seed of an independent substream (one per shift point,
/// per circuit, per sweep row, ...).
inline constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t salt) noexcept {
    return mix64(seed ^ mix64(salt ^ 0x5851F42D4C957F2DULL));
}

/// 64 random bits for counter `index` of stream `seed`.
inline constexpr std::uint64_t bits(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed) + index);
}

/// Uniform double in [0, 1) for counter `index` of stream `seed`.
inline double uniform(std::uint64_t seed, std::uint64_t index) noexcept {
    return static_cast<double>(bits(seed, index) >> 11) * 0x1.0p-53;
}

/// Sequential facade over the counter stream, for code that just wants
/// "the next number" (ensemble generation, test fixtures).
class Sequence {
  public:
    explicit Sequence(std::uint64_t seed) : seed_(seed) {}

    double uniform() { return rng::uniform(seed_, counter_++); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], both ends inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(bits(seed_, counter_++) % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::uint64_t next_bits() { return bits(seed_, counter_++); }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace gradshift::rng
