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
 * Expectation-value estimation: exact and shot-based, the two-level
 * mixed-value correction, and eigenbasis diagnostics.
 */

#include "vacuum/hamiltonian.hpp"
#include "vacuum/pauli.hpp"
#include "vacuum/statevector.hpp"

#include <cstdint>
#include <vector>

namespace vacuum {

struct EigenOverlaps {
    /// c_j = <E_j|psi>.
    std::vector<complex_t> coefficients;
    /// |c_j|^2, summing to 1 within 1e-10.
    std::vector<double> weights;
};

struct EstimateResult {
    double value = 0.0;
    /// 0 in exact mode.
    double std_error = 0.0;
    /// 0 in exact mode.
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const EstimateResult &, const EstimateResult &) = default;
};

/// How expectation values are obtained: shots == 0 means exact.
struct Estimation {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] bool exact() const noexcept { return shots == 0; }
};

[[nodiscard]] EigenOverlaps eigen_overlaps(const StateVector &state,
                                           const Spectrum &spectrum);

/// raw / (2 p0 - 1): recovers <E0|O|E0> from the unfiltered mixture
/// p0 <E0|O|E0> + (1 - p0) <E1|O|E1>, valid only when
/// <E1|O|E1> = -<E0|O|E0>. Throws DomainError if |2 p0 - 1| < 1e-6.
[[nodiscard]] double corrected_expectation(double raw, double p0);

/// Rotates the support of `observable` into the Z basis, samples `shots`
/// outcomes and averages the +-1 parities. std_error = sqrt((1 - mean^2)/shots).
[[nodiscard]] EstimateResult shot_expectation(const StateVector &state,
                                              const PauliString &observable,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

/// Term-by-term shot estimate (term k seeded with derive_seed(seed, k)),
/// errors combined in quadrature.
[[nodiscard]] EstimateResult shot_expectation(const StateVector &state,
                                              const PauliSum &observable,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

/// Exact or shot estimate depending on `mode`.
[[nodiscard]] EstimateResult estimate(const StateVector &state,
                                      const PauliSum &observable,
                                      const Estimation &mode);

/// sum_j |c_j|^2 <E_j|O|E_j>: the part of <O> that survives dephasing.
[[nodiscard]] double diagonal_expectation(const StateVector &state,
                                          const Spectrum &spectrum,
                                          const PauliSum &observable);

/// sum_{j<k} 2 Re(conj(c_j) c_k <E_j|O|E_k>): the interference part of <O>,
/// which is what makes <O>(t) oscillate under a fixed Hamiltonian.
[[nodiscard]] double cross_term(const StateVector &state,
                                const Spectrum &spectrum,
                                const PauliSum &observable);

} // namespace vacuum
