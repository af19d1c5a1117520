// Copyright 2026 The vacuum-refine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace vacuum {

using complex_t = std::complex<double>;
using DenseMatrix =
    Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kUnitaryTolerance = 1e-12;

/**
 * A unitary acting on `arity()` qubits. The matrix is indexed with the
 * first target qubit as the most significant bit of the local index.
 *
 * Construction checks ||U^dagger U - I||_max against the tolerance and
 * throws ValidationError on failure, so every GateMatrix in the program is
 * unitary.
 */
class GateMatrix {
  public:
    explicit GateMatrix(DenseMatrix entries,
                        double tolerance = kUnitaryTolerance);

    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    [[nodiscard]] const DenseMatrix &matrix() const noexcept { return entries_; }

    [[nodiscard]] GateMatrix adjoint() const;

    /// `phase * U`; |phase| must be 1.
    [[nodiscard]] GateMatrix with_phase(complex_t phase) const;

    /// Matrix product `this * other` (apply `other` first).
    [[nodiscard]] GateMatrix compose(const GateMatrix &other) const;

  private:
    std::size_t arity_;
    DenseMatrix entries_;
};

/// max_ij |(U^dagger U - I)_ij|.
[[nodiscard]] double unitarity_defect(const DenseMatrix &m);

namespace gates {

GateMatrix identity(std::size_t arity = 1);
GateMatrix pauli_x();
GateMatrix pauli_y();
GateMatrix pauli_z();
GateMatrix hadamard();
/// S = |0><0| + i|1><1|.
GateMatrix phase_s();
/// Rz(theta) = exp(-i theta Z / 2).
GateMatrix rz(double theta);
/// Rx(theta) = exp(-i theta X / 2).
GateMatrix rx(double theta);
/// Ry(theta) = exp(-i theta Y / 2).
GateMatrix ry(double theta);
/// Control on the first qubit, target on the second.
GateMatrix cnot();

} // namespace gates

} // namespace vacuum
