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

/**
 * @file
 * Dense complex linear algebra for pure states and observables on up to
 * six qubits. All values are immutable after construction and validated
 * against the tolerances in tolerances.hpp.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "gradshift/tolerances.hpp"

namespace gradshift {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 6;

/// Normalized pure state on `num_qubits()` qubits.
///
/// Qubit 0 is the leftmost label in a Pauli string and the most significant
/// bit of a basis-state index.
class StateVector {
  public:
    /// Validates that the dimension is a power of two (<= 2^6) and the
    /// L2 norm is 1 within tol::kStateNorm.
    explicit StateVector(Vector amplitudes);

    /// |0...0> on `num_qubits` qubits.
    static StateVector zero_state(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const Vector &amplitudes() const { return amplitudes_; }

  private:
    Vector amplitudes_;
    int num_qubits_;
};

/// Dense observable / generator with A = A^dag within tol::kHermiticity.
class HermitianOperator {
  public:
    explicit HermitianOperator(Matrix matrix);

    const Matrix &matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    Matrix matrix_;
};

/// Dense unitary, ||U^dag U - 1||_max < tol::kUnitarity.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Matrix matrix);

    static UnitaryMatrix identity(Eigen::Index dim);

    const Matrix &matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    Matrix matrix_;
};

/// Spectral decomposition A = sum_k lambda_k P_k with distinct (merged)
/// eigenvalues in ascending order and mutually orthogonal projectors.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<Matrix> projectors;
};

/// Tensor product of single-qubit Paulis; `labels` drawn from {I,X,Y,Z},
/// one per qubit, qubit 0 leftmost. Throws DimensionError for an empty
/// list, ValidationError for an unknown label.
HermitianOperator pauli_string(const std::string &labels);

/// Real-weighted sum of Pauli strings, all of the same length.
HermitianOperator pauli_sum(const std::vector<std::pair<double, std::string>> &terms);

/// Re <psi|A|psi>. Throws ConsistencyError if the imaginary part exceeds
/// tol::kImaginaryPart, DimensionError on mismatched dimensions.
double expectation(const StateVector &state, const HermitianOperator &obs);

/// Spectral decomposition with eigenvalues merged when closer than
/// `degeneracy_tol` relative to the spectral norm.
Spectrum eigendecompose(const HermitianOperator &obs,
                        double degeneracy_tol = tol::kDegeneracyMerge);

/// u * state, renormalized against rounding drift. Throws ConsistencyError
/// if the pre-normalization drift exceeds tol::kNormDrift.
StateVector apply_unitary(const StateVector &state, const UnitaryMatrix &u);

/// Max-entry absolute value, the norm used by the validation checks.
double max_abs(const Matrix &m);

}  // namespace gradshift
