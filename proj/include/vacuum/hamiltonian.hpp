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

/**
 * @file
 * Model Hamiltonians, linear interpolation between them, and the dense
 * exact-diagonalisation path used as a reference throughout.
 */

#include "vacuum/gate.hpp"
#include "vacuum/pauli.hpp"
#include "vacuum/statevector.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace vacuum {

/// Dense paths refuse registers above this many qubits by default.
inline constexpr std::size_t kDenseQubitCap = 10;

/// Ground-state gaps below this are reported as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-10;

/// -J (Z + X)/sqrt(2) on one qubit: -J times the Hadamard gate, with
/// eigenvalues -J (ground) and +J. Requires J > 0.
[[nodiscard]] PauliSum hadamard_hamiltonian(double J);

/// -J sum_q Z_q. Its ground state is |0...0>. Requires J > 0.
[[nodiscard]] PauliSum initial_hamiltonian(double J, std::size_t num_qubits);

/// Two-site transverse-field Ising pair -J (Z0 Z1 + g (X0 + X1)).
[[nodiscard]] PauliSum transverse_ising_pair(double J, double g);

/// (1 - s) h0 + s h1 with like strings merged. Requires 0 <= s <= 1.
[[nodiscard]] PauliSum interpolate(const PauliSum &h0, const PauliSum &h1,
                                   double s);

/// sum_k c_k (tensor product of Pauli matrices). Throws ResourceError above
/// `qubit_cap` qubits.
[[nodiscard]] DenseMatrix to_matrix(const PauliSum &h,
                                    std::size_t qubit_cap = kDenseQubitCap);

struct Spectrum {
    /// Ascending.
    Eigen::VectorXd eigenvalues;
    /// Column j is the normalised eigenvector for eigenvalues[j]; each
    /// column is phased so its largest-magnitude entry is real positive.
    DenseMatrix eigenvectors;
    /// eigenvalues[1] - eigenvalues[0] < kDegeneracyTolerance.
    bool degenerate_ground = false;

    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(eigenvalues.size());
    }
    [[nodiscard]] double gap() const { return eigenvalues(1) - eigenvalues(0); }
    [[nodiscard]] double energy(std::size_t j) const {
        return eigenvalues(static_cast<Eigen::Index>(j));
    }
    [[nodiscard]] StateVector eigenstate(std::size_t j) const;
    [[nodiscard]] StateVector ground_state() const { return eigenstate(0); }
};

/// Full spectrum of `h`. The residual ||H V - V diag(lambda)||_max and the
/// orthonormality defect of V are both checked against 1e-10 (scaled by
/// max(1, ||H||)); failure throws NumericalError.
[[nodiscard]] Spectrum exact_diagonalize(const PauliSum &h,
                                         std::size_t qubit_cap = kDenseQubitCap);

/// exp(-i h duration) as V exp(-i Lambda duration) V^dagger.
[[nodiscard]] GateMatrix evolution_unitary(const Spectrum &spectrum,
                                           double duration);
[[nodiscard]] GateMatrix evolution_unitary(const PauliSum &h, double duration,
                                           std::size_t qubit_cap = kDenseQubitCap);

} // namespace vacuum
