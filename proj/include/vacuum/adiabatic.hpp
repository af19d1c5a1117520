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
 * Linear-schedule adiabatic evolution H(s) = (1 - s) H0 + s H1 for
 * 0 <= t <= T, followed by evolution under the fixed final Hamiltonian.
 *
 * Step k of the ramp (k = 0 .. T/dt - 1) evolves for dt under H(s_k) with
 * the midpoint value s_k = (k + 1/2) dt / T.
 */

#include "vacuum/estimator.hpp"
#include "vacuum/hamiltonian.hpp"
#include "vacuum/pauli.hpp"
#include "vacuum/statevector.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum {

struct Schedule {
    double total_time = 0.0;
    double dt = 0.0;
    double hold_time = 0.0;

    /// Throws DomainError unless T > 0, 0 < dt <= T, hold_time >= 0 and both
    /// T/dt and hold_time/dt are within 1e-9 of an integer.
    void validate() const;

    [[nodiscard]] std::size_t ramp_steps() const;
    [[nodiscard]] std::size_t hold_steps() const;
    /// Midpoint schedule value of ramp step k.
    [[nodiscard]] double s_at(std::size_t step) const;
};

enum class EvolutionMode {
    /// exp(-i H dt) from the exact spectrum.
    exact_step,
    /// First-order product of exp(-i c_k P_k dt) in
    /// PauliSum::product_ordered_terms order.
    trotter1,
};

[[nodiscard]] std::string_view to_string(EvolutionMode mode) noexcept;
/// Throws DomainError for unknown names.
[[nodiscard]] EvolutionMode parse_evolution_mode(std::string_view name);

struct NamedObservable {
    std::string name;
    PauliSum op;
};

struct ObservableValue {
    std::string name;
    double value = 0.0;
    double std_error = 0.0;
};

struct TrajectoryRecord {
    double t = 0.0;
    /// Schedule value of the Hamiltonian that produced this record.
    double s = 0.0;
    std::vector<ObservableValue> observables;
    /// Weight in the exact ground eigenspace of the record's Hamiltonian
    /// (the ground-state fidelity when that state is unique).
    double fidelity_to_ground = 0.0;
    /// Exact <H> for the record's Hamiltonian.
    double energy = 0.0;
    std::optional<StateVector> snapshot;

    /// Throws DomainError if `name` was not recorded.
    [[nodiscard]] const ObservableValue &observable(std::string_view name) const;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    std::vector<std::string> warnings;

    /// Appends, enforcing strictly increasing t and fidelity in [0, 1].
    void append(TrajectoryRecord record);

    [[nodiscard]] std::vector<double> times() const;
    [[nodiscard]] std::vector<double> series(std::string_view name) const;
};

struct RecordingOptions {
    std::vector<NamedObservable> observables;
    Estimation estimation;
    bool keep_snapshots = false;
    /// Record the state before the first step as well.
    bool record_initial = true;
    /// Record r draws its shots from derive_seed(seed, stream_offset + r).
    std::uint64_t stream_offset = 0;
};

/// One step of length dt under a fixed Hamiltonian.
[[nodiscard]] StateVector evolve_step(StateVector state, const PauliSum &h,
                                      double dt, EvolutionMode mode);

struct EvolutionResult {
    StateVector final_state;
    Trajectory trajectory;
};

/// Starts from |0...0>, which must be the ground state of `h0` (true for
/// initial_hamiltonian), and ramps to `h1` over schedule.total_time.
/// Records t = 0 (if requested) and the end of every step.
[[nodiscard]] EvolutionResult run_adiabatic(const PauliSum &h0, const PauliSum &h1,
                                            const Schedule &schedule,
                                            EvolutionMode mode,
                                            const RecordingOptions &options);

/// Evolves under the fixed `h` for schedule.hold_time starting at time
/// `start_time`, recording the end of every step (and `start_time` itself
/// if options.record_initial).
[[nodiscard]] EvolutionResult run_hold(StateVector state, const PauliSum &h,
                                       const Schedule &schedule,
                                       EvolutionMode mode,
                                       const RecordingOptions &options,
                                       double start_time);

struct OscillationFit {
    /// Empty when fewer than three mean crossings were found.
    std::optional<double> period;
    double center = 0.0;
    double amplitude = 0.0;
    std::size_t crossings = 0;
};

/// Fits values(t) ~ center + a cos(w t) + b sin(w t), with w taken from
/// the spacing of crossings through the running center estimate.
[[nodiscard]] OscillationFit fit_oscillation(std::span<const double> times,
                                             std::span<const double> values);

} // namespace vacuum
