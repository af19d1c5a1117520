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
 * Ancilla-based filtering of an approximate ground state.
 *
 * With U(theta) = i exp(-i theta H / 2), an eigencomponent of energy E
 * picks up z = i exp(-i E theta / 2) per application. An ancilla prepared
 * with a Hadamard, controlling U^p and closed with a Hadamard, leaves
 * (1 + z^p)/2 on its |0> branch. For m ancillas with powers p_j the
 * all-zero branch carries prod_j (1 + z^{p_j})/2; the default powers 2^j
 * give (1 + z + ... + z^{2^m - 1}) / 2^m. Choosing theta = pi / E0 makes
 * z = 1 for the ground state, which then passes with amplitude 1.
 *
 * Joint registers put the ancillas first (qubits 0 .. m-1) and the system
 * register after them.
 */

#include "vacuum/estimator.hpp"
#include "vacuum/hamiltonian.hpp"
#include "vacuum/pauli.hpp"
#include "vacuum/statevector.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum {

struct FilterConfig {
    std::size_t num_ancillas = 2;
    double theta = 0.0;
    /// Ancilla j controls U(theta)^powers[j]. Empty means 2^j.
    std::vector<unsigned> powers;

    /// Throws DomainError on m = 0, a power of 0, or a size mismatch.
    void validate() const;
    [[nodiscard]] std::vector<unsigned> resolved_powers() const;
};

struct FilterOutcome {
    /// Probability of reading all ancillas as 0.
    double success_probability = 0.0;
    /// Post-selected system state; set when the filter ran in discard mode.
    std::optional<StateVector> refined_state;
    /// Whether the all-zero outcome was kept (discard mode only).
    bool kept = false;
    /// Full ancilla+system state; set in non-discard mode.
    std::optional<StateVector> joint_state;
};

/// Maps |0>|psi> to alpha|0>|E0> + beta|1>|E1> for a one-qubit system
/// (qubit 0 = ancilla, qubit 1 = system) via V, CNOT(system -> ancilla),
/// V^dagger, with V|E_j> = |j>. Throws ValidationError if the ancilla is
/// not in |0> and DomainError for a degenerate or non-2x2 spectrum.
[[nodiscard]] StateVector tag_circuit_one_qubit(const StateVector &joint,
                                                const Spectrum &spectrum);

/// E0' = <psi|H|psi>.
[[nodiscard]] double estimate_e0(const StateVector &state, const PauliSum &h);
[[nodiscard]] EstimateResult estimate_e0(const StateVector &state,
                                         const PauliSum &h, const Estimation &mode);

/// theta = pi / e0_prime (negative for a negative energy). Throws
/// DomainError if |e0_prime| < 1e-9.
[[nodiscard]] double choose_theta(double e0_prime);

/// Applies controlled i^k exp(-i k theta H / 2) from `ancilla` onto the
/// trailing h.num_qubits() qubits of `joint`.
[[nodiscard]] StateVector controlled_u_power(StateVector joint, Qubit ancilla,
                                             const PauliSum &h, double theta,
                                             unsigned k);
[[nodiscard]] StateVector controlled_u_power(StateVector joint, Qubit ancilla,
                                             const Spectrum &spectrum,
                                             double theta, unsigned k);

/// prod_j (1 + z^{p_j}) / 2 with z = i exp(-i E theta / 2).
[[nodiscard]] complex_t filter_amplitude(double energy, double theta,
                                         const FilterConfig &config);

/// Hadamard wall, controlled powers, Hadamard wall, then (if `discard`)
/// post-selection of all ancillas on 0. Throws ImpossibleOutcomeError when
/// discarding and the success probability is below 1e-12.
[[nodiscard]] FilterOutcome apply_filter(const StateVector &system_state,
                                         const PauliSum &h,
                                         const FilterConfig &config, bool discard);

struct RefinementIteration {
    double e0_prime = 0.0;
    double theta = 0.0;
    double success_probability = 0.0;
    /// Fidelity to the exact ground state after this pass.
    double fidelity_to_ground = 0.0;
    /// 1 - weight of the exact ground state after this pass.
    double excited_weight = 0.0;
    /// All eigen-weights after this pass, ascending energy order.
    std::vector<double> weights;
};

enum class RefinementStatus { converged, max_iterations, aborted };

[[nodiscard]] std::string_view to_string(RefinementStatus status) noexcept;

struct RefinementReport {
    std::vector<RefinementIteration> iterations;
    RefinementStatus status = RefinementStatus::max_iterations;
    std::string message;
    /// State after the last successful pass.
    std::optional<StateVector> final_state;
};

struct RefineOptions {
    std::size_t num_ancillas = 2;
    /// Empty means 2^j.
    std::vector<unsigned> powers;
    std::size_t max_iters = 5;
    double target_infidelity = 0.0;
    /// Use this theta every pass instead of pi / E0'.
    std::optional<double> fixed_theta;
};

/// Repeats {E0' = <H>, theta = pi/E0', filter with discard} until the
/// infidelity to the exact ground state is <= target or max_iters passes
/// ran. A failed post-selection ends the loop with status `aborted` and
/// the iterations completed so far.
[[nodiscard]] RefinementReport refine_iteratively(const StateVector &system_state,
                                                  const PauliSum &h,
                                                  const RefineOptions &options);

} // namespace vacuum
