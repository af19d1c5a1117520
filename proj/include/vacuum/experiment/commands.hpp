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
 * The four experiment commands. Each `run_*` function is pure computation
 * returning a result struct; `write_*` functions turn results into files.
 *
 * The recorded observable "Z" is Pauli Z on system qubit 0.
 */

#include "vacuum/adiabatic.hpp"
#include "vacuum/experiment/config.hpp"
#include "vacuum/filter.hpp"
#include "vacuum/hamiltonian.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum::experiment {

inline constexpr std::string_view kVersion = "0.1.0";

struct SweepResult {
    /// Ramp records (empty when starting from the exact ground state).
    Trajectory prep;
    /// Records after T under the fixed model Hamiltonian.
    Trajectory hold;
    /// |<E0|psi(T)>|^2.
    double ground_weight = 0.0;
    /// 2|alpha|^2 - 1.
    double two_p0_minus_1 = 0.0;
    /// Exact <E0|Z|E0> of the model.
    double exact_ground_z = 0.0;
    /// Fit of the hold-phase Z series (unset for fewer than 3 hold records).
    std::optional<OscillationFit> oscillation;
};

[[nodiscard]] SweepResult run_sweep(const ExperimentConfig &config);
void write_sweep_csv(const SweepResult &result, const std::filesystem::path &path);

struct FilterRunResult {
    Trajectory prep;
    /// Starts at t = T right after the tagging circuit.
    Trajectory filtered;
    bool discard = true;
    /// Exact |alpha|^2 before tagging.
    double ground_weight = 0.0;
    /// Mixed value p0 <E0|Z|E0> + (1 - p0) <E1|Z|E1> (estimated in shot mode).
    double raw = 0.0;
    double raw_std_error = 0.0;
    /// 2 p0 - 1 (estimated from ancilla shots in shot mode).
    double two_p0_minus_1 = 0.0;
    double two_p0_minus_1_std_error = 0.0;
    double corrected = 0.0;
    double corrected_std_error = 0.0;
    /// Discard mode: <Z> of the post-selected state at T.
    std::optional<double> postselected_z;
    std::optional<double> postselected_std_error;
    /// Exact values around the insertion at t = T.
    double pre_value_at_T = 0.0;
    double post_value_at_T = 0.0;
    double discontinuity = 0.0;
    double cross_term_at_T = 0.0;
    double exact_ground_z = 0.0;
};

/// Requires a one-qubit model; throws ConfigError otherwise.
[[nodiscard]] FilterRunResult run_filter_experiment(const ExperimentConfig &config);
void write_filter_csv(const FilterRunResult &result, const std::filesystem::path &path);

struct RefineRunResult {
    RefinementReport report;
    double start_fidelity = 0.0;
    double start_energy = 0.0;
    double exact_e0 = 0.0;
};

/// Requires 1..4 system qubits; throws ConfigError otherwise.
[[nodiscard]] RefineRunResult run_refine(const ExperimentConfig &config);
void write_refine_csv(const RefineRunResult &result, const std::filesystem::path &path);

struct DiagResult {
    PauliSum hamiltonian{1};
    Spectrum spectrum;
    /// <E0|Z_q|E0> per qubit.
    std::vector<double> ground_z;
    /// Cross term of Z_q for the diag.state file, per qubit.
    std::optional<std::vector<double>> cross_terms_z;
    std::string report;
};

[[nodiscard]] DiagResult run_diag(const ExperimentConfig &config);

} // namespace vacuum::experiment
