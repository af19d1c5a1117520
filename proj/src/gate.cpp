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

#include "vacuum/gate.hpp"

#include "vacuum/error.hpp"

#include <cmath>
#include <string>

namespace vacuum {

namespace {

std::size_t arity_of(const DenseMatrix &m) {
    const auto rows = static_cast<std::size_t>(m.rows());
    if (m.rows() != m.cols() || rows < 2 || (rows & (rows - 1)) != 0) {
        throw ValidationError("gate matrix must be square with a power-of-two "
                              "dimension >= 2, got " +
                              std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
    }
    std::size_t arity = 0;
    while ((std::size_t{1} << arity) < rows) {
        ++arity;
    }
    return arity;
}

DenseMatrix two_by_two(complex_t a, complex_t b, complex_t c, complex_t d) {
    DenseMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

double unitarity_defect(const DenseMatrix &m) {
    const DenseMatrix product = m.adjoint() * m;
    return (product - DenseMatrix::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
}

GateMatrix::GateMatrix(DenseMatrix entries, double tolerance)
    : arity_(arity_of(entries)), entries_(std::move(entries)) {
    const double defect = unitarity_defect(entries_);
    if (!(defect <= tolerance)) {
        throw ValidationError("gate matrix is not unitary (defect " +
                              std::to_string(defect) + ")");
    }
}

GateMatrix GateMatrix::adjoint() const {
    return GateMatrix(entries_.adjoint());
}

GateMatrix GateMatrix::with_phase(complex_t phase) const {
    if (std::abs(std::abs(phase) - 1.0) > kUnitaryTolerance) {
        throw DomainError("phase factor must have unit modulus");
    }
    return GateMatrix(phase * entries_);
}

GateMatrix GateMatrix::compose(const GateMatrix &other) const {
    if (other.arity_ != arity_) {
        throw DomainError("cannot compose gates of different arity");
    }
    return GateMatrix(entries_ * other.entries_);
}

namespace gates {

GateMatrix identity(std::size_t arity) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
    return GateMatrix(DenseMatrix::Identity(dim, dim));
}

GateMatrix pauli_x() { return GateMatrix(two_by_two(0, 1, 1, 0)); }

GateMatrix pauli_y() {
    return GateMatrix(two_by_two(0, complex_t{0, -1}, complex_t{0, 1}, 0));
}

GateMatrix pauli_z() { return GateMatrix(two_by_two(1, 0, 0, -1)); }

GateMatrix hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return GateMatrix(two_by_two(r, r, r, -r));
}

GateMatrix phase_s() { return GateMatrix(two_by_two(1, 0, 0, complex_t{0, 1})); }

GateMatrix rz(double theta) {
    const complex_t e = std::polar(1.0, -theta / 2);
    return GateMatrix(two_by_two(e, 0, 0, std::conj(e)));
}

GateMatrix rx(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return GateMatrix(two_by_two(c, complex_t{0, -s}, complex_t{0, -s}, c));
}

GateMatrix ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return GateMatrix(two_by_two(c, -s, s, c));
}

GateMatrix cnot() {
    DenseMatrix m = DenseMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return GateMatrix(m);
}

} // namespace gates

} // namespace vacuum
