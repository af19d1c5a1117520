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

#include "vacuum/experiment/commands.hpp"

#include "vacuum/error.hpp"
#include "vacuum/estimator.hpp"
#include "vacuum/experiment/csv.hpp"
#include "vacuum/rng.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vacuum::experiment {

namespace {

/// Seed streams for summary estimates, disjoint from per-record streams.
constexpr std::uint64_t kSummaryStream = std::uint64_t{1} << 62;

PauliSum z_on(std::size_t num_qubits, std::size_t qubit) {
    PauliSum z(num_qubits);
    z.add_term(1.0, PauliString::single(num_qubits, qubit, 'Z'));
    return z;
}

PauliSum with_leading_identities(const PauliSum &h, std::size_t count) {
    PauliSum out(h.num_qubits() + count);
    const std::string prefix(count, 'I');
    for (const auto &term : h.terms()) {
        out.add_term(term.coefficient, PauliString(prefix + term.string.to_string()));
    }
    return out;
}

RecordingOptions recording(const ExperimentConfig &config, PauliSum z) {
    RecordingOptions options;
    options.observables.push_back({"Z", std::move(z)});
    options.estimation = config.estimation_mode();
    return options;
}

std::string fmt15(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    return buffer;
}

struct Prepared {
    Trajectory prep;
    StateVector state;
};

Prepared prepare(const ExperimentConfig &config, const PauliSum &h,
                 const Spectrum &spectrum, const RecordingOptions &options) {
    if (config.start == StartState::ground) {
        return {Trajectory{}, spectrum.ground_state()};
    }
    auto ramp = run_adiabatic(start_hamiltonian(config), h, config.schedule,
                              config.mode, options);
    return {std::move(ramp.trajectory), std::move(ramp.final_state)};
}

void write_trajectory_rows(CsvWriter &csv, const Trajectory &trajectory,
                           std::string_view phase, bool with_phase) {
    for (const auto &r : trajectory.records) {
        const auto &z = r.observable("Z");
        std::vector<CsvWriter::Cell> cells{r.t};
        if (with_phase) {
            cells.emplace_back(std::string(phase));
        }
        cells.insert(cells.end(), {z.value, z.std_error, r.fidelity_to_ground, r.energy});
        csv.row(cells);
    }
}

} // namespace

SweepResult run_sweep(const ExperimentConfig &config) {
    validate(config);
    const PauliSum h = model_hamiltonian(config);
    const Spectrum spectrum = exact_diagonalize(h);
    const std::size_t n = h.num_qubits();

    SweepResult result;
    RecordingOptions options = recording(config, z_on(n, 0));
    auto prepared = prepare(config, h, spectrum, options);
    result.prep = std::move(prepared.prep);

    result.ground_weight = fidelity(prepared.state, spectrum.ground_state());
    result.two_p0_minus_1 = 2.0 * result.ground_weight - 1.0;
    result.exact_ground_z = expectation(spectrum.ground_state(), z_on(n, 0));

    options.record_initial = false;
    options.stream_offset = config.schedule.ramp_steps() + 1;
    auto hold = run_hold(std::move(prepared.state), h, config.schedule, config.mode,
                         options, config.schedule.total_time);
    result.hold = std::move(hold.trajectory);

    if (result.hold.records.size() >= 3) {
        const auto times = result.hold.times();
        const auto values = result.hold.series("Z");
        result.oscillation = fit_oscillation(times, values);
    }
    return result;
}

void write_sweep_csv(const SweepResult &result, const std::filesystem::path &path) {
    CsvWriter csv(path, {"t", "expval_Z", "std_error", "fidelity", "energy"});
    write_trajectory_rows(csv, result.prep, "prep", false);
    write_trajectory_rows(csv, result.hold, "hold", false);
}

FilterRunResult run_filter_experiment(const ExperimentConfig &config) {
    validate(config);
    const PauliSum h = model_hamiltonian(config);
    if (h.num_qubits() != 1) {
        throw ConfigError("model.hamiltonian: filter-run requires a one-qubit model, got " +
                          std::to_string(h.num_qubits()) + " qubits");
    }
    const Spectrum spectrum = exact_diagonalize(h);
    const PauliSum z = z_on(1, 0);
    const PauliSum z_system = z_on(2, 1);
    const Estimation mode = config.estimation_mode();

    FilterRunResult result;
    result.discard = config.filter.discard;
    result.exact_ground_z = expectation(spectrum.ground_state(), z);

    RecordingOptions options = recording(config, z);
    auto prepared = prepare(config, h, spectrum, options);
    result.prep = std::move(prepared.prep);
    const StateVector &state_T = prepared.state;

    result.ground_weight = fidelity(state_T, spectrum.ground_state());
    result.cross_term_at_T = cross_term(state_T, spectrum, z);
    result.pre_value_at_T = expectation(state_T, z);

    const StateVector tagged =
        tag_circuit_one_qubit(StateVector::basis(1, 0).tensor(state_T), spectrum);
    const Qubit ancilla[1] = {0};

    double p0 = 0.0;
    double p0_std_error = 0.0;
    if (mode.exact()) {
        result.raw = expectation(tagged, z_system);
        p0 = outcome_probability(tagged, ancilla, BitString("0"));
    } else {
        const auto raw = shot_expectation(tagged, z_system, mode.shots,
                                          derive_seed(mode.seed, kSummaryStream));
        result.raw = raw.value;
        result.raw_std_error = raw.std_error;
        const auto counts = measure_sample(tagged, ancilla, mode.shots,
                                           derive_seed(mode.seed, kSummaryStream + 1));
        const auto it = counts.find(BitString("0"));
        const double shots = static_cast<double>(mode.shots);
        p0 = it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
        p0_std_error = std::sqrt(p0 * (1.0 - p0) / shots);
    }
    result.two_p0_minus_1 = 2.0 * p0 - 1.0;
    result.two_p0_minus_1_std_error = 2.0 * p0_std_error;
    result.corrected = corrected_expectation(result.raw, p0);
    {
        const double d = result.two_p0_minus_1;
        const double a = result.raw_std_error / d;
        const double b = result.raw * result.two_p0_minus_1_std_error / (d * d);
        result.corrected_std_error = std::sqrt(a * a + b * b);
    }

    RecordingOptions hold_options = options;
    hold_options.record_initial = true;
    hold_options.stream_offset = config.schedule.ramp_steps() + 1;
    if (config.filter.discard) {
        auto selected = postselect(tagged, ancilla, BitString("0"));
        result.post_value_at_T = expectation(selected.collapsed, z);
        auto hold = run_hold(std::move(selected.collapsed), h, config.schedule,
                             config.mode, hold_options, config.schedule.total_time);
        result.filtered = std::move(hold.trajectory);
        const auto &first = result.filtered.records.front().observable("Z");
        result.postselected_z = first.value;
        result.postselected_std_error = first.std_error;
    } else {
        result.post_value_at_T = expectation(tagged, z_system);
        hold_options.observables = {{"Z", z_system}};
        auto hold = run_hold(tagged, with_leading_identities(h, 1), config.schedule,
                             config.mode, hold_options, config.schedule.total_time);
        result.filtered = std::move(hold.trajectory);
        // The ancilla is idle, so the joint ground space is degenerate by
        // construction; that warning carries no information here.
        result.filtered.warnings.clear();
    }
    result.discontinuity = result.pre_value_at_T - result.post_value_at_T;
    return result;
}

void write_filter_csv(const FilterRunResult &result, const std::filesystem::path &path) {
    CsvWriter csv(path, {"t", "phase", "expval_Z", "std_error", "fidelity", "energy"});
    write_trajectory_rows(csv, result.prep, "prep", true);
    write_trajectory_rows(csv, result.filtered, "filtered", true);
}

RefineRunResult run_refine(const ExperimentConfig &config) {
    validate(config);
    const PauliSum h = model_hamiltonian(config);
    if (h.num_qubits() < 1 || h.num_qubits() > 4) {
        throw ConfigError("model.hamiltonian: refine supports 1..4 system qubits, got " +
                          std::to_string(h.num_qubits()));
    }
    const Spectrum spectrum = exact_diagonalize(h);

    RecordingOptions options;
    options.record_initial = false;
    auto prepared = prepare(config, h, spectrum, options);

    RefineRunResult result;
    result.exact_e0 = spectrum.energy(0);
    result.start_fidelity = fidelity(prepared.state, spectrum.ground_state());
    result.start_energy = expectation(prepared.state, h);

    RefineOptions refine;
    refine.num_ancillas = config.filter.ancillas;
    refine.powers = config.filter.powers;
    refine.max_iters = config.filter.max_iters;
    refine.target_infidelity = config.filter.target_infidelity;
    switch (config.filter.theta_mode) {
    case ThetaMode::automatic:
        break;
    case ThetaMode::fixed:
        refine.fixed_theta = config.filter.theta;
        break;
    case ThetaMode::oracle:
        refine.fixed_theta = choose_theta(spectrum.energy(0));
        break;
    }
    result.report = refine_iteratively(prepared.state, h, refine);
    return result;
}

void write_refine_csv(const RefineRunResult &result, const std::filesystem::path &path) {
    CsvWriter csv(path, {"iteration", "E0_prime", "theta", "success_probability",
                         "fidelity", "excited_weight", "status"});
    const auto &iterations = result.report.iterations;
    const bool aborted = result.report.status == RefinementStatus::aborted;
    for (std::size_t i = 0; i < iterations.size(); ++i) {
        const auto &it = iterations[i];
        const bool last = i + 1 == iterations.size() && !aborted;
        csv.row({static_cast<long long>(i + 1), it.e0_prime, it.theta,
                 it.success_probability, it.fidelity_to_ground, it.excited_weight,
                 std::string(last ? to_string(result.report.status) : "ok")});
    }
    if (aborted) {
        csv.row({static_cast<long long>(iterations.size() + 1), std::string(),
                 std::string(), std::string(), std::string(), std::string(),
                 std::string("aborted")});
    }
}

DiagResult run_diag(const ExperimentConfig &config) {
    validate(config);
    DiagResult result;
    result.hamiltonian = model_hamiltonian(config);
    result.spectrum = exact_diagonalize(result.hamiltonian);
    const std::size_t n = result.hamiltonian.num_qubits();
    const StateVector ground = result.spectrum.ground_state();
    for (std::size_t q = 0; q < n; ++q) {
        result.ground_z.push_back(expectation(ground, z_on(n, q)));
    }

    std::ostringstream report;
    report << "model: " << config.model.hamiltonian << '\n'
           << "num_qubits: " << n << '\n'
           << "terms:\n";
    for (const auto &term : result.hamiltonian.terms()) {
        report << "  " << fmt15(term.coefficient) << ' ' << term.string << '\n';
    }
    report << "eigenvalues:";
    for (std::size_t j = 0; j < result.spectrum.dimension(); ++j) {
        report << ' ' << fmt15(result.spectrum.energy(j));
    }
    report << '\n'
           << "gap: " << fmt15(result.spectrum.gap()) << '\n'
           << "degenerate_ground: " << (result.spectrum.degenerate_ground ? "true" : "false")
           << '\n';
    const auto ground_amplitudes = ground.amplitudes();
    report << "ground_state:";
    for (const auto &a : ground_amplitudes) {
        report << " (" << fmt15(a.real()) << ',' << fmt15(a.imag()) << ')';
    }
    report << '\n';
    for (std::size_t q = 0; q < n; ++q) {
        report << "ground_expval_Z[" << q << "]: " << fmt15(result.ground_z[q]) << '\n';
    }

    if (!config.diag_state.empty()) {
        std::filesystem::path path{config.diag_state};
        if (path.is_relative() && !config.base_dir.empty()) {
            path = config.base_dir / path;
        }
        const StateVector state = load_state_file(path);
        if (state.num_qubits() != n) {
            throw ConfigError("diag.state: state has " + std::to_string(state.num_qubits()) +
                              " qubits, model has " + std::to_string(n));
        }
        const auto overlaps = eigen_overlaps(state, result.spectrum);
        report << "state_weights:";
        for (double w : overlaps.weights) {
            report << ' ' << fmt15(w);
        }
        report << '\n';
        std::vector<double> crosses;
        for (std::size_t q = 0; q < n; ++q) {
            const PauliSum zq = z_on(n, q);
            crosses.push_back(cross_term(state, result.spectrum, zq));
            report << "state_expval_Z[" << q << "]: " << fmt15(expectation(state, zq)) << '\n'
                   << "state_diagonal_Z[" << q << "]: "
                   << fmt15(diagonal_expectation(state, result.spectrum, zq)) << '\n'
                   << "state_cross_term_Z[" << q << "]: " << fmt15(crosses.back()) << '\n';
        }
        result.cross_terms_z = std::move(crosses);
    }
    result.report = report.str();
    return result;
}

} // namespace vacuum::experiment
