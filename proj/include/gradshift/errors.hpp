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

#include <stdexcept>
#include <string>

namespace gradshift {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/matrix dimensions or invalid indices.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string &msg) : Error(msg) {}
};

/// A matrix failed a structural check (hermiticity, unitarity, norm).
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string &msg) : Error(msg) {}
};

/// Generator does not have exactly two distinct eigenvalues.
class RGateValidationError : public Error {
  public:
    explicit RGateValidationError(const std::string &msg) : Error(msg) {}
};

/// A sampled function is not representable as a0 + a1 cos(2rt) + b1 sin(2rt).
class NotAnRGateFunction : public Error {
  public:
    explicit NotAnRGateFunction(const std::string &msg) : Error(msg) {}
};

/// Centered shift rule evaluated at a singular shift, |sin(2 r gamma)| ~ 0.
class SingularShiftError : public Error {
  public:
    explicit SingularShiftError(const std::string &msg) : Error(msg) {}
};

/// Finite-difference step is (numerically) zero.
class ZeroStepError : public Error {
  public:
    explicit ZeroStepError(const std::string &msg) : Error(msg) {}
};

/// A genericity condition of the counterexample construction failed.
class ConditionViolationError : public Error {
  public:
    explicit ConditionViolationError(const std::string &msg) : Error(msg) {}
};

/// An internal invariant broke (probability sums, imaginary parts, ...).
class ConsistencyError : public Error {
  public:
    explicit ConsistencyError(const std::string &msg) : Error(msg) {}
};

/// Bad experiment configuration (missing files, empty grids, ...).
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string &msg) : Error(msg) {}
};

}  // namespace gradshift
