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

#include "gradshift/linalg.hpp"

#include <cmath>
#include <cstddef>

#include "gradshift/errors.hpp"

namespace gradshift {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
    int q = 0;
    while ((Eigen::Index{1} << q) < n) {
        ++q;
    }
    return q;
}

Eigen::Matrix2cd single_qubit_pauli(char label) {
    Eigen::Matrix2cd m;
    switch (label) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw ValidationError(std::string("unknown Pauli label '") + label + "'");
    }
    return m;
}

}  // namespace

double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (!is_power_of_two(amplitudes_.size())) {
        throw DimensionError("state dimension " + std::to_string(amplitudes_.size()) +
                             " is not a power of two");
    }
    num_qubits_ = log2_exact(amplitudes_.size());
    if (num_qubits_ > kMaxQubits) {
        throw DimensionError("qubit count " + std::to_string(num_qubits_) + " exceeds cap " +
                             std::to_string(kMaxQubits));
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol::kStateNorm) {
        throw ValidationError("state norm deviates from 1 by " +
                              std::to_string(std::abs(norm - 1.0)));
    }
}

StateVector StateVector::zero_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    Vector amps = Vector::Zero(Eigen::Index{1} << num_qubits);
    amps(0) = 1.0;
    return StateVector(std::move(amps));
}

HermitianOperator::HermitianOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || !is_power_of_two(matrix_.rows())) {
        throw DimensionError("operator must be square with power-of-two dimension, got " +
                             std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
    const double dev = max_abs(matrix_ - matrix_.adjoint());
    if (dev > tol::kHermiticity) {
        throw ValidationError("matrix is not Hermitian, max |A - A^dag| = " + std::to_string(dev));
    }
}

UnitaryMatrix::UnitaryMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || !is_power_of_two(matrix_.rows())) {
        throw DimensionError("unitary must be square with power-of-two dimension");
    }
    const Matrix gram = matrix_.adjoint() * matrix_;
    const double dev = max_abs(gram - Matrix::Identity(matrix_.rows(), matrix_.cols()));
    if (dev > tol::kUnitarity) {
        throw ValidationError("matrix is not unitary, max |U^dag U - 1| = " + std::to_string(dev));
    }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
}

HermitianOperator pauli_string(const std::string &labels) {
    if (labels.empty()) {
        throw DimensionError("Pauli label list must not be empty");
    }
    if (static_cast<int>(labels.size()) > kMaxQubits) {
        throw DimensionError("Pauli string length exceeds qubit cap");
    }
    Matrix result = single_qubit_pauli(labels[0]);
    for (std::size_t k = 1; k < labels.size(); ++k) {
        const Eigen::Matrix2cd factor = single_qubit_pauli(labels[k]);
        Matrix next(result.rows() * 2, result.cols() * 2);
        for (Eigen::Index i = 0; i < result.rows(); ++i) {
            for (Eigen::Index j = 0; j < result.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = result(i, j) * factor;
            }
        }
        result = std::move(next);
    }
    return HermitianOperator(std::move(result));
}

HermitianOperator pauli_sum(const std::vector<std::pair<double, std::string>> &terms) {
    if (terms.empty()) {
        throw DimensionError("Pauli sum must have at least one term");
    }
    const std::size_t q = terms.front().second.size();
    Matrix acc = Matrix::Zero(Eigen::Index{1} << q, Eigen::Index{1} << q);
    for (const auto &[coeff, labels] : terms) {
        if (labels.size() != q) {
            throw DimensionError("all Pauli strings in a sum must have equal length");
        }
        acc += coeff * pauli_string(labels).matrix();
    }
    return HermitianOperator(std::move(acc));
}

double expectation(const StateVector &state, const HermitianOperator &obs) {
    if (state.dim() != obs.dim()) {
        throw DimensionError("state dimension " + std::to_string(state.dim()) +
                             " does not match observable dimension " + std::to_string(obs.dim()));
    }
    const Complex value = state.amplitudes().dot(obs.matrix() * state.amplitudes());
    if (std::abs(value.imag()) > tol::kImaginaryPart) {
        throw ConsistencyError("expectation value has imaginary part " +
                               std::to_string(value.imag()));
    }
    return value.real();
}

Spectrum eigendecompose(const HermitianOperator &obs, double degeneracy_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(obs.matrix());
    if (solver.info() != Eigen::Success) {
        throw ConsistencyError("Hermitian eigensolver failed");
    }
    const Eigen::VectorXd values = solver.eigenvalues();
    const Matrix vectors = solver.eigenvectors();

    const double spectral_norm = values.cwiseAbs().maxCoeff();
    const double merge_threshold = degeneracy_tol * std::max(spectral_norm, 1.0);

    Spectrum spectrum;
    Eigen::Index group_start = 0;
    for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values(i) - values(group_start) > merge_threshold) {
            const Eigen::Index width = i - group_start;
            const Matrix block = vectors.middleCols(group_start, width);
            spectrum.projectors.push_back(block * block.adjoint());
            spectrum.eigenvalues.push_back(values.segment(group_start, width).mean());
            group_start = i;
        }
    }
    return spectrum;
}

StateVector apply_unitary(const StateVector &state, const UnitaryMatrix &u) {
    if (state.dim() != u.dim()) {
        throw DimensionError("state dimension does not match unitary dimension");
    }
    Vector out = u.matrix() * state.amplitudes();
    const double norm = out.norm();
    if (std::abs(norm - 1.0) > tol::kNormDrift) {
        throw ConsistencyError("norm drifted by " + std::to_string(std::abs(norm - 1.0)) +
                               " under a unitary application");
    }
    out /= norm;
    return StateVector(std::move(out));
}

}  // namespace gradshift
