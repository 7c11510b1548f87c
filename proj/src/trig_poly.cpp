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

#include "gradshift/trig_poly.hpp"

#include <cmath>
#include <numbers>

#include "gradshift/errors.hpp"
#include "gradshift/rng.hpp"

namespace gradshift {

namespace {
// Fixed stream for the fit's residual check; makes the oracle a pure
// function of its inputs.
constexpr std::uint64_t kResidualStream = 0x0f17c0de15f00dULL;
constexpr int kResidualSamples = 8;
}  // namespace

TrigPoly::TrigPoly(double a0, double a1, double b1, double r)
    : a0_(a0), a1_(a1), b1_(b1), r_(r) {
    if (r <= 0.0) {
        throw ValidationError("trig polynomial needs r > 0");
    }
}

TrigPoly TrigPoly::fit(const std::function<double(double)> &f, double r) {
    const double quarter = std::numbers::pi / (4.0 * r);
    const double s0 = f(0.0);
    const double s1 = f(quarter);
    const double s2 = f(2.0 * quarter);

    const double a0 = (s0 + s2) / 2.0;
    const double a1 = (s0 - s2) / 2.0;
    const double b1 = s1 - a0;
    TrigPoly poly(a0, a1, b1, r);

    const double period = 2.0 * std::numbers::pi / r;
    for (int k = 0; k < kResidualSamples; ++k) {
        const double t = period * rng::uniform(kResidualStream, static_cast<std::uint64_t>(k));
        const double residual = std::abs(poly(t) - f(t));
        if (residual > tol::kOracleResidual) {
            throw NotAnRGateFunction("fit residual " + std::to_string(residual) + " at t = " +
                                     std::to_string(t) + "; function is not an r-gate "
                                     "expectation value for r = " + std::to_string(r));
        }
    }
    return poly;
}

TrigPoly TrigPoly::fit(const SingleComponentFunction &f) {
    return fit([&f](double t) { return f(t); }, f.r());
}

TrigPoly TrigPoly::derivative(int order) const {
    if (order < 0) {
        throw ValidationError("derivative order must be >= 0");
    }
    if (order == 0) {
        return *this;
    }
    // d/dt rotates (a1, b1) -> (2r b1, -2r a1); the closed form below keeps
    // the signs exact instead of accumulating a rotation per order.
    double scale = 1.0;
    for (int k = 0; k < order; ++k) {
        scale *= 2.0 * r_;
    }
    switch (order % 4) {
    case 1:
        return TrigPoly(0.0, scale * b1_, -scale * a1_, r_);
    case 2:
        return TrigPoly(0.0, -scale * a1_, -scale * b1_, r_);
    case 3:
        return TrigPoly(0.0, -scale * b1_, scale * a1_, r_);
    default:
        return TrigPoly(0.0, scale * a1_, scale * b1_, r_);
    }
}

double TrigPoly::operator()(double t) const {
    return a0_ + a1_ * std::cos(2.0 * r_ * t) + b1_ * std::sin(2.0 * r_ * t);
}

}  // namespace gradshift
