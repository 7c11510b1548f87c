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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gradshift/errors.hpp"
#include "gradshift/random_circuits.hpp"
#include "gradshift/rng.hpp"
#include "test_circuits.hpp"

using namespace gradshift;
using namespace gradshift::testing;

TEST(Fit, CosCircuit) {
    const TrigPoly p = TrigPoly::fit(restrict_component(cos_t_circuit(), {0.0}, 0));
    EXPECT_NEAR(p.a0(), 0.0, 1e-12);
    EXPECT_NEAR(p.a1(), 1.0, 1e-12);
    EXPECT_NEAR(p.b1(), 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(p.r(), 0.5);
}

TEST(Fit, ConstantCircuit) {
    const TrigPoly p = TrigPoly::fit(restrict_component(constant_circuit(), {0.0}, 0));
    EXPECT_NEAR(p.a0(), 1.0, 1e-12);
    EXPECT_NEAR(p.a1(), 0.0, 1e-12);
    EXPECT_NEAR(p.b1(), 0.0, 1e-12);
}

TEST(Fit, SinCircuit) {
    const TrigPoly p = TrigPoly::fit(restrict_component(sin_t_circuit(), {0.0}, 0));
    EXPECT_NEAR(p.a0(), 0.0, 1e-12);
    EXPECT_NEAR(p.a1(), 0.0, 1e-12);
    EXPECT_NEAR(p.b1(), 1.0, 1e-12);
}

TEST(Fit, ReproducesNodeSamples) {
    const SingleComponentFunction f = restrict_component(sin_t_circuit(), {0.0}, 0);
    const TrigPoly p = TrigPoly::fit(f);
    const double quarter = std::numbers::pi / (4.0 * f.r());
    for (double t : {0.0, quarter, 2.0 * quarter}) {
        EXPECT_NEAR(p(t), f(t), 1e-12);
    }
}

TEST(Fit, RejectsHigherHarmonics) {
    // cos(t) + 0.3 cos(2t) has a second harmonic relative to r = 1/2.
    const auto not_r_gate = [](double t) { return std::cos(t) + 0.3 * std::cos(2.0 * t); };
    EXPECT_THROW(TrigPoly::fit(not_r_gate, 0.5), NotAnRGateFunction);
}

TEST(Fit, RejectsWrongR) {
    const auto cosine = [](double t) { return std::cos(t); };
    EXPECT_THROW(TrigPoly::fit(cosine, 1.0), NotAnRGateFunction);
    EXPECT_NO_THROW(TrigPoly::fit(cosine, 0.5));
}

TEST(Derivative, CosToMinusSin) {
    const TrigPoly d = TrigPoly(0.0, 1.0, 0.0, 0.5).derivative(1);
    EXPECT_DOUBLE_EQ(d.a0(), 0.0);
    EXPECT_DOUBLE_EQ(d.a1(), 0.0);
    EXPECT_DOUBLE_EQ(d.b1(), -1.0);
}

TEST(Derivative, ConstantVanishes) {
    const TrigPoly d = TrigPoly(3.5, 0.0, 0.0, 1.0).derivative(1);
    EXPECT_DOUBLE_EQ(d.a0(), 0.0);
    EXPECT_DOUBLE_EQ(d.a1(), 0.0);
    EXPECT_DOUBLE_EQ(d.b1(), 0.0);
}

TEST(Derivative, ThirdOrderOfCos) {
    // (cos t)''' = sin t for r = 1/2.
    const TrigPoly d3 = TrigPoly(0.0, 1.0, 0.0, 0.5).derivative(3);
    EXPECT_DOUBLE_EQ(d3.a0(), 0.0);
    EXPECT_DOUBLE_EQ(d3.a1(), 0.0);
    EXPECT_DOUBLE_EQ(d3.b1(), 1.0);
}

TEST(Derivative, OrderZeroIsIdentity) {
    const TrigPoly p(0.2, -0.4, 0.9, 1.3);
    const TrigPoly d0 = p.derivative(0);
    EXPECT_DOUBLE_EQ(d0.a0(), p.a0());
    EXPECT_DOUBLE_EQ(d0.a1(), p.a1());
    EXPECT_DOUBLE_EQ(d0.b1(), p.b1());
}

TEST(Eval, PointValues) {
    EXPECT_DOUBLE_EQ(TrigPoly(0.0, 1.0, 0.0, 0.5)(0.0), 1.0);
    EXPECT_DOUBLE_EQ(TrigPoly(2.5, 0.0, 0.0, 1.0)(1.7), 2.5);
    EXPECT_NEAR(TrigPoly(0.0, 0.0, 1.0, 0.5)(std::numbers::pi / 2.0), 1.0, 1e-15);
}

TEST(Oracle, DerivativeMatchesFivePointStencil) {
    const EnsembleOptions options;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const EnsembleInstance inst = make_random_instance(options, seed);
        const SingleComponentFunction f(inst.circuit, inst.theta, inst.component);
        const TrigPoly p = TrigPoly::fit(f);
        const TrigPoly d = p.derivative(1);

        rng::Sequence rng(seed + 1000);
        const double t = rng.uniform(-3.0, 3.0);
        const double h = 1e-4;
        const double stencil =
            (-p(t + 2.0 * h) + 8.0 * p(t + h) - 8.0 * p(t - h) + p(t - 2.0 * h)) / (12.0 * h);
        EXPECT_NEAR(d(t), stencil, 1e-8);
    }
}

TEST(Oracle, RecurrenceAtCoefficientLevel) {
    // f^{(n+2)} = -(2r)^2 f^{(n)} for n >= 1.
    const EnsembleOptions options;
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        const EnsembleInstance inst = make_random_instance(options, seed);
        const SingleComponentFunction f(inst.circuit, inst.theta, inst.component);
        const TrigPoly p = TrigPoly::fit(f);
        const double factor = -4.0 * f.r() * f.r();
        for (int n = 1; n <= 4; ++n) {
            const TrigPoly lhs = p.derivative(n + 2);
            const TrigPoly rhs = p.derivative(n);
            const double scale = std::max({1.0, std::abs(rhs.a1()), std::abs(rhs.b1())});
            EXPECT_NEAR(lhs.a1(), factor * rhs.a1(), 1e-13 * scale);
            EXPECT_NEAR(lhs.b1(), factor * rhs.b1(), 1e-13 * scale);
            EXPECT_DOUBLE_EQ(lhs.a0(), 0.0);
        }
    }
}

TEST(Oracle, PeriodPiOverR) {
    const TrigPoly p(0.3, -0.7, 0.2, 1.3);
    const double period = std::numbers::pi / 1.3;
    for (double t : {0.0, 0.4, -2.1}) {
        EXPECT_NEAR(p(t), p(t + period), 1e-12);
    }
}

TEST(Oracle, FitResidualHoldsOnRandomEnsemble) {
    // Every single-component restriction of a random r-gate circuit must be
    // exactly representable; a throw here would mean a broken generator.
    const EnsembleOptions options;
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const EnsembleInstance inst = make_random_instance(options, seed);
        const SingleComponentFunction f(inst.circuit, inst.theta, inst.component);
        EXPECT_NO_THROW(TrigPoly::fit(f)) << "seed " << seed;
    }
}
