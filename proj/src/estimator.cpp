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

#include "vacuum/estimator.hpp"

#include "vacuum/error.hpp"
#include "vacuum/rng.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace vacuum {

namespace {

void require_matching(const StateVector &state, const Spectrum &spectrum) {
    if (state.dimension() != spectrum.dimension()) {
        throw DomainError("state dimension " + std::to_string(state.dimension()) +
                          " does not match spectrum dimension " +
                          std::to_string(spectrum.dimension()));
    }
}

GateMatrix s_dagger() {
    DenseMatrix m(2, 2);
    m << 1, 0, 0, complex_t{0, -1};
    return GateMatrix(m);
}

} // namespace

EigenOverlaps eigen_overlaps(const StateVector &state, const Spectrum &spectrum) {
    require_matching(state, spectrum);
    EigenOverlaps out;
    out.coefficients.resize(spectrum.dimension());
    out.weights.resize(spectrum.dimension());
    double total = 0.0;
    for (std::size_t j = 0; j < spectrum.dimension(); ++j) {
        out.coefficients[j] = inner_product(spectrum.eigenstate(j), state);
        out.weights[j] = std::norm(out.coefficients[j]);
        total += out.weights[j];
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw NumericalError("eigen-overlap weights sum to " + std::to_string(total));
    }
    return out;
}

double corrected_expectation(double raw, double p0) {
    const double denominator = 2.0 * p0 - 1.0;
    if (!(std::abs(denominator) >= 1e-6)) {
        throw DomainError("unusable correction: |2 p0 - 1| = " +
                          std::to_string(std::abs(denominator)) + " < 1e-6");
    }
    return raw / denominator;
}

EstimateResult shot_expectation(const StateVector &state,
                                const PauliString &observable,
                                std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be >= 1");
    }
    if (observable.num_qubits() != state.num_qubits()) {
        throw DomainError("observable width does not match the register");
    }
    if (observable.is_identity()) {
        return {1.0, 0.0, shots, seed};
    }

    StateVector rotated = state;
    const auto support = observable.support();
    for (Qubit q : support) {
        switch (observable.symbol(q)) {
        case 'X':
            rotated.apply(gates::hadamard(), {q});
            break;
        case 'Y':
            rotated.apply(s_dagger(), {q});
            rotated.apply(gates::hadamard(), {q});
            break;
        default:
            break;
        }
    }

    const auto histogram = measure_sample(rotated, support, shots, seed);
    std::int64_t signed_total = 0;
    for (const auto &[outcome, count] : histogram) {
        const bool odd = std::popcount(outcome.to_index()) % 2 != 0;
        signed_total += odd ? -static_cast<std::int64_t>(count)
                            : static_cast<std::int64_t>(count);
    }
    const double mean = static_cast<double>(signed_total) / static_cast<double>(shots);
    const double variance = std::max(0.0, 1.0 - mean * mean);
    return {mean, std::sqrt(variance / static_cast<double>(shots)), shots, seed};
}

EstimateResult shot_expectation(const StateVector &state,
                                const PauliSum &observable, std::uint64_t shots,
                                std::uint64_t seed) {
    if (observable.num_qubits() != state.num_qubits()) {
        throw DomainError("observable width does not match the register");
    }
    double value = 0.0;
    double variance = 0.0;
    std::uint64_t k = 0;
    for (const auto &term : observable.terms()) {
        const auto part =
            shot_expectation(state, term.string, shots, derive_seed(seed, k++));
        value += term.coefficient * part.value;
        variance += term.coefficient * term.coefficient * part.std_error * part.std_error;
    }
    return {value, std::sqrt(variance), shots, seed};
}

EstimateResult estimate(const StateVector &state, const PauliSum &observable,
                        const Estimation &mode) {
    if (mode.exact()) {
        return {expectation(state, observable), 0.0, 0, mode.seed};
    }
    return shot_expectation(state, observable, mode.shots, mode.seed);
}

double diagonal_expectation(const StateVector &state, const Spectrum &spectrum,
                            const PauliSum &observable) {
    const auto overlaps = eigen_overlaps(state, spectrum);
    double total = 0.0;
    for (std::size_t j = 0; j < spectrum.dimension(); ++j) {
        if (overlaps.weights[j] == 0.0) {
            continue;
        }
        const auto e = spectrum.eigenstate(j);
        total += overlaps.weights[j] * expectation(e, observable);
    }
    return total;
}

double cross_term(const StateVector &state, const Spectrum &spectrum,
                  const PauliSum &observable) {
    const auto overlaps = eigen_overlaps(state, spectrum);
    const std::size_t dim = spectrum.dimension();
    std::vector<StateVector> basis;
    basis.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        basis.push_back(spectrum.eigenstate(j));
    }
    double total = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            const complex_t element = matrix_element(basis[j], observable, basis[k]);
            total += 2.0 * (std::conj(overlaps.coefficients[j]) *
                            overlaps.coefficients[k] * element)
                               .real();
        }
    }
    return total;
}

} // namespace vacuum
