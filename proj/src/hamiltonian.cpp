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

#include "vacuum/hamiltonian.hpp"

#include "vacuum/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace vacuum {

namespace {

void require_positive_coupling(double J) {
    if (!(J > 0.0) || !std::isfinite(J)) {
        throw DomainError("coupling J must be positive, got " + std::to_string(J));
    }
}

void require_cap(std::size_t num_qubits, std::size_t cap) {
    if (num_qubits > cap) {
        throw ResourceError("dense matrix of " + std::to_string(num_qubits) +
                            " qubits exceeds the cap of " + std::to_string(cap));
    }
}

} // namespace

PauliSum hadamard_hamiltonian(double J) {
    require_positive_coupling(J);
    const double c = -J / std::sqrt(2.0);
    PauliSum h(1);
    h.add_term(c, PauliString("Z"));
    h.add_term(c, PauliString("X"));
    return h;
}

PauliSum initial_hamiltonian(double J, std::size_t num_qubits) {
    require_positive_coupling(J);
    if (num_qubits == 0) {
        throw DomainError("initial Hamiltonian needs at least one qubit");
    }
    PauliSum h(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        h.add_term(-J, PauliString::single(num_qubits, q, 'Z'));
    }
    return h;
}

PauliSum transverse_ising_pair(double J, double g) {
    require_positive_coupling(J);
    PauliSum h(2);
    h.add_term(-J, PauliString("ZZ"));
    h.add_term(-J * g, PauliString("XI"));
    h.add_term(-J * g, PauliString("IX"));
    return h;
}

PauliSum interpolate(const PauliSum &h0, const PauliSum &h1, double s) {
    if (h0.num_qubits() != h1.num_qubits()) {
        throw DomainError("cannot interpolate between " +
                          std::to_string(h0.num_qubits()) + "- and " +
                          std::to_string(h1.num_qubits()) + "-qubit Hamiltonians");
    }
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError("schedule parameter s must lie in [0, 1], got " +
                          std::to_string(s));
    }
    PauliSum out(h0.num_qubits());
    for (const auto &term : h0.terms()) {
        out.add_term((1.0 - s) * term.coefficient, term.string);
    }
    for (const auto &term : h1.terms()) {
        out.add_term(s * term.coefficient, term.string);
    }
    return out;
}

DenseMatrix to_matrix(const PauliSum &h, std::size_t qubit_cap) {
    require_cap(h.num_qubits(), qubit_cap);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.num_qubits());
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (const auto &term : h.terms()) {
        const std::uint64_t flip = term.string.x_mask();
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto i = static_cast<std::uint64_t>(col);
            m(static_cast<Eigen::Index>(i ^ flip), col) +=
                term.coefficient * term.string.phase(i);
        }
    }
    return m;
}

StateVector Spectrum::eigenstate(std::size_t j) const {
    if (j >= dimension()) {
        throw DomainError("eigenstate index " + std::to_string(j) + " out of range");
    }
    const auto column = eigenvectors.col(static_cast<Eigen::Index>(j));
    std::vector<complex_t> amplitudes(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        amplitudes[i] = column(static_cast<Eigen::Index>(i));
    }
    return StateVector::from_amplitudes(std::move(amplitudes));
}

Spectrum exact_diagonalize(const PauliSum &h, std::size_t qubit_cap) {
    const DenseMatrix m = to_matrix(h, qubit_cap);
    const Eigen::MatrixXcd dense = m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }

    Spectrum spectrum;
    spectrum.eigenvalues = solver.eigenvalues();
    spectrum.eigenvectors = solver.eigenvectors();

    // Fix the phase freedom of each column for reproducible outputs.
    for (Eigen::Index j = 0; j < spectrum.eigenvectors.cols(); ++j) {
        auto column = spectrum.eigenvectors.col(j);
        Eigen::Index pivot = 0;
        column.cwiseAbs().maxCoeff(&pivot);
        const complex_t p = column(pivot);
        column *= std::conj(p) / std::abs(p);
    }

    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const DenseMatrix &v = spectrum.eigenvectors;
    const DenseMatrix residual =
        m * v - v * spectrum.eigenvalues.cast<complex_t>().asDiagonal();
    const double residual_max = residual.cwiseAbs().maxCoeff();
    const double orthonormality = unitarity_defect(v);
    if (!(residual_max <= 1e-10 * scale) || !(orthonormality <= 1e-10)) {
        throw NumericalError("diagonalisation failed its checks (residual " +
                             std::to_string(residual_max) + ", orthonormality " +
                             std::to_string(orthonormality) + ")");
    }
    spectrum.degenerate_ground = spectrum.gap() < kDegeneracyTolerance;
    return spectrum;
}

GateMatrix evolution_unitary(const Spectrum &spectrum, double duration) {
    const auto dim = static_cast<Eigen::Index>(spectrum.dimension());
    Eigen::VectorXcd phases(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        phases(j) = std::polar(1.0, -spectrum.eigenvalues(j) * duration);
    }
    const DenseMatrix &v = spectrum.eigenvectors;
    DenseMatrix u = v * phases.asDiagonal() * v.adjoint();
    return GateMatrix(std::move(u));
}

GateMatrix evolution_unitary(const PauliSum &h, double duration,
                             std::size_t qubit_cap) {
    return evolution_unitary(exact_diagonalize(h, qubit_cap), duration);
}

} // namespace vacuum
