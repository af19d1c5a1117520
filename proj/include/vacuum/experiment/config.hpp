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
 * Experiment configuration: a flat `section.key = value` text format.
 *
 *   model.hamiltonian = hadamard       # hadamard | tfim2 | file:<path>
 *   model.J = pi/4
 *   schedule.T = 36
 *   schedule.dt = 1/24
 *
 * Numeric values accept plain decimals, `pi`, and products/quotients of
 * those (`pi/4`, `-2*pi`, `1/24`). Blank lines and `#` comments are
 * ignored; unknown keys are errors.
 */

#include "vacuum/adiabatic.hpp"
#include "vacuum/pauli.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum::experiment {

enum class ThetaMode {
    /// theta = pi / <psi|H|psi> each pass.
    automatic,
    /// filter.theta as given.
    fixed,
    /// theta = pi / E0 from exact diagonalisation.
    oracle,
};

enum class StartState {
    /// Adiabatic preparation from |0...0>.
    adiabatic,
    /// Exact ground state of the model (skips the ramp).
    ground,
};

struct ModelConfig {
    /// "hadamard", "tfim2" or "file:<path>" (relative to the config file).
    std::string hamiltonian = "hadamard";
    double J = M_PI / 4;
    /// Transverse field of tfim2.
    double g = 1.0;
};

struct FilterSettings {
    std::size_t ancillas = 2;
    ThetaMode theta_mode = ThetaMode::automatic;
    double theta = 0.0;
    std::vector<unsigned> powers;
    bool discard = true;
    std::size_t max_iters = 5;
    double target_infidelity = 1e-12;
};

struct EstimationSettings {
    /// false: exact expectation values.
    bool use_shots = false;
    std::uint64_t shots = 1000000;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    ModelConfig model;
    Schedule schedule{36.0, 1.0 / 24.0, 12.0};
    EvolutionMode mode = EvolutionMode::exact_step;
    StartState start = StartState::adiabatic;
    FilterSettings filter;
    EstimationSettings estimation;
    /// State file for the diag cross-term report (empty = none).
    std::string diag_state;
    std::string output_prefix = "vacuum-refine";
    /// Directory that relative paths are resolved against.
    std::filesystem::path base_dir;

    [[nodiscard]] Estimation estimation_mode() const {
        return {estimation.use_shots ? estimation.shots : 0, estimation.seed};
    }
};

/// Parses and validates. Throws ConfigError naming the line or field.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text);

/// Reads `path`; relative paths inside are resolved against its directory.
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

/// Canonical text form; parse_config(serialize(c)) reproduces c.
[[nodiscard]] std::string serialize(const ExperimentConfig &config);

/// Checks cross-field constraints; throws ConfigError naming the field.
void validate(const ExperimentConfig &config);

/// Parses a numeric expression such as `pi/4` or `0.5`.
[[nodiscard]] double parse_number(std::string_view text);

/// The model Hamiltonian the config describes.
[[nodiscard]] PauliSum model_hamiltonian(const ExperimentConfig &config);

/// -J sum Z over the model's qubits.
[[nodiscard]] PauliSum start_hamiltonian(const ExperimentConfig &config);

/// Reads a state file: one `<re> <im>` pair per line, `#` comments allowed.
[[nodiscard]] StateVector load_state_file(const std::filesystem::path &path);

} // namespace vacuum::experiment
