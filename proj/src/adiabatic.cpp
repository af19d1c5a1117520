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

#include "vacuum/adiabatic.hpp"

#include "vacuum/error.hpp"
#include "vacuum/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vacuum {

namespace {

constexpr double kWholeStepTolerance = 1e-9;

std::size_t whole_steps(double duration, double dt, const char *what) {
    const double ratio = duration / dt;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > kWholeStepTolerance) {
        throw DomainError(std::string(what) + " / dt = " + std::to_string(ratio) +
                          " is not a whole number of steps");
    }
    return static_cast<std::size_t>(rounded);
}

std::vector<Qubit> all_qubits(std::size_t n) {
    std::vector<Qubit> qubits(n);
    std::iota(qubits.begin(), qubits.end(), Qubit{0});
    return qubits;
}

void trotter_step(StateVector &state, const PauliSum &h, double dt) {
    for (const auto &term : h.product_ordered_terms()) {
        state.apply_pauli_exponential(term.string, term.coefficient * dt);
    }
}

// Weight in the (possibly degenerate) ground eigenspace; equals the
// fidelity to the ground state when it is unique.
double ground_space_weight(const StateVector &state, const Spectrum &spectrum) {
    double weight = 0.0;
    for (std::size_t j = 0; j < spectrum.dimension(); ++j) {
        if (spectrum.energy(j) - spectrum.energy(0) >= kDegeneracyTolerance) {
            break;
        }
        weight += fidelity(state, spectrum.eigenstate(j));
    }
    return weight;
}

TrajectoryRecord make_record(const StateVector &state, double t, double s,
                             const PauliSum &h, const Spectrum &spectrum,
                             const RecordingOptions &options,
                             std::uint64_t record_index) {
    TrajectoryRecord record;
    record.t = t;
    record.s = s;
    record.fidelity_to_ground =
        std::clamp(ground_space_weight(state, spectrum), 0.0, 1.0);
    record.energy = expectation(state, h);
    Estimation mode = options.estimation;
    if (!mode.exact()) {
        mode.seed = derive_seed(options.estimation.seed,
                                options.stream_offset + record_index);
    }
    for (const auto &obs : options.observables) {
        const auto result = estimate(state, obs.op, mode);
        record.observables.push_back({obs.name, result.value, result.std_error});
    }
    if (options.keep_snapshots) {
        record.snapshot = state;
    }
    return record;
}

} // namespace

void Schedule::validate() const {
    if (!(total_time > 0.0) || !std::isfinite(total_time)) {
        throw DomainError("schedule.T must be positive");
    }
    if (!(dt > 0.0) || !(dt <= total_time)) {
        throw DomainError("schedule.dt must satisfy 0 < dt <= T");
    }
    if (!(hold_time >= 0.0) || !std::isfinite(hold_time)) {
        throw DomainError("schedule.hold_time must be >= 0");
    }
    (void)whole_steps(total_time, dt, "T");
    (void)whole_steps(hold_time, dt, "hold_time");
}

std::size_t Schedule::ramp_steps() const {
    return whole_steps(total_time, dt, "T");
}

std::size_t Schedule::hold_steps() const {
    return whole_steps(hold_time, dt, "hold_time");
}

double Schedule::s_at(std::size_t step) const {
    const auto n = static_cast<double>(ramp_steps());
    return (static_cast<double>(step) + 0.5) / n;
}

std::string_view to_string(EvolutionMode mode) noexcept {
    switch (mode) {
    case EvolutionMode::exact_step:
        return "exact_step";
    case EvolutionMode::trotter1:
        return "trotter1";
    }
    return "unknown";
}

EvolutionMode parse_evolution_mode(std::string_view name) {
    if (name == "exact_step") {
        return EvolutionMode::exact_step;
    }
    if (name == "trotter1") {
        return EvolutionMode::trotter1;
    }
    throw DomainError("unknown evolution mode '" + std::string(name) +
                      "' (expected exact_step or trotter1)");
}

const ObservableValue &TrajectoryRecord::observable(std::string_view name) const {
    for (const auto &o : observables) {
        if (o.name == name) {
            return o;
        }
    }
    throw DomainError("observable '" + std::string(name) + "' was not recorded");
}

void Trajectory::append(TrajectoryRecord record) {
    if (!records.empty() && !(record.t > records.back().t)) {
        throw DomainError("trajectory times must be strictly increasing");
    }
    if (!(record.fidelity_to_ground >= 0.0 && record.fidelity_to_ground <= 1.0)) {
        throw DomainError("trajectory fidelity outside [0, 1]");
    }
    records.push_back(std::move(record));
}

std::vector<double> Trajectory::times() const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto &r : records) {
        out.push_back(r.t);
    }
    return out;
}

std::vector<double> Trajectory::series(std::string_view name) const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto &r : records) {
        out.push_back(r.observable(name).value);
    }
    return out;
}

StateVector evolve_step(StateVector state, const PauliSum &h, double dt,
                        EvolutionMode mode) {
    if (!(dt > 0.0)) {
        throw DomainError("dt must be positive");
    }
    if (h.num_qubits() != state.num_qubits()) {
        throw DomainError("Hamiltonian width does not match the register");
    }
    if (mode == EvolutionMode::exact_step) {
        const auto targets = all_qubits(state.num_qubits());
        state.apply(evolution_unitary(h, dt), targets);
    } else {
        trotter_step(state, h, dt);
    }
    return state;
}

EvolutionResult run_adiabatic(const PauliSum &h0, const PauliSum &h1,
                              const Schedule &schedule, EvolutionMode mode,
                              const RecordingOptions &options) {
    schedule.validate();
    if (h0.num_qubits() != h1.num_qubits()) {
        throw DomainError("h0 and h1 act on different numbers of qubits");
    }
    const std::size_t n = h0.num_qubits();
    const auto targets = all_qubits(n);
    StateVector state = StateVector::basis(n, 0);

    const Spectrum initial = exact_diagonalize(h0);
    if (std::abs(expectation(state, h0) - initial.energy(0)) > 1e-10) {
        throw DomainError("|0...0> is not a ground state of h0");
    }

    Trajectory trajectory;
    if (initial.degenerate_ground) {
        trajectory.warnings.push_back("degenerate ground state of h0");
    }
    if (options.record_initial) {
        trajectory.append(make_record(state, 0.0, 0.0, h0, initial, options, 0));
    }

    const std::size_t steps = schedule.ramp_steps();
    bool warned = false;
    auto check_degenerate = [&](const Spectrum &spectrum, double s) {
        if (spectrum.degenerate_ground && !warned) {
            trajectory.warnings.push_back("degenerate instantaneous ground state at s=" +
                                          std::to_string(s));
            warned = true;
        }
    };
    for (std::size_t k = 0; k < steps; ++k) {
        const double s = schedule.s_at(k);
        const PauliSum hk = interpolate(h0, h1, s);
        const Spectrum spectrum = exact_diagonalize(hk);
        check_degenerate(spectrum, s);
        if (mode == EvolutionMode::exact_step) {
            state.apply(evolution_unitary(spectrum, schedule.dt), targets);
        } else {
            trotter_step(state, hk, schedule.dt);
        }
        // Records at t use H(t / T), so the last one refers to h1 itself.
        const double s_end = static_cast<double>(k + 1) / static_cast<double>(steps);
        const double t = schedule.total_time * s_end;
        const PauliSum h_end = k + 1 == steps ? h1 : interpolate(h0, h1, s_end);
        const Spectrum end_spectrum = exact_diagonalize(h_end);
        check_degenerate(end_spectrum, s_end);
        trajectory.append(make_record(state, t, s_end, h_end, end_spectrum, options, k + 1));
    }
    return {std::move(state), std::move(trajectory)};
}

EvolutionResult run_hold(StateVector state, const PauliSum &h,
                         const Schedule &schedule, EvolutionMode mode,
                         const RecordingOptions &options, double start_time) {
    schedule.validate();
    if (h.num_qubits() != state.num_qubits()) {
        throw DomainError("Hamiltonian width does not match the register");
    }
    const auto targets = all_qubits(state.num_qubits());
    const Spectrum spectrum = exact_diagonalize(h);
    Trajectory trajectory;
    if (spectrum.degenerate_ground) {
        trajectory.warnings.push_back("degenerate ground state of the hold Hamiltonian");
    }
    if (options.record_initial) {
        trajectory.append(make_record(state, start_time, 1.0, h, spectrum, options, 0));
    }

    const std::size_t steps = schedule.hold_steps();
    const std::optional<GateMatrix> step_unitary =
        mode == EvolutionMode::exact_step
            ? std::optional<GateMatrix>(evolution_unitary(spectrum, schedule.dt))
            : std::nullopt;
    for (std::size_t k = 0; k < steps; ++k) {
        if (step_unitary) {
            state.apply(*step_unitary, targets);
        } else {
            trotter_step(state, h, schedule.dt);
        }
        const double t = start_time + schedule.hold_time * static_cast<double>(k + 1) /
                                          static_cast<double>(steps);
        trajectory.append(make_record(state, t, 1.0, h, spectrum, options, k + 1));
    }
    return {std::move(state), std::move(trajectory)};
}

OscillationFit fit_oscillation(std::span<const double> times,
                               std::span<const double> values) {
    if (times.size() != values.size() || times.size() < 3) {
        throw DomainError("oscillation fit needs >= 3 matching samples");
    }
    const std::size_t n = values.size();
    OscillationFit fit;
    fit.center = std::accumulate(values.begin(), values.end(), 0.0) /
                 static_cast<double>(n);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    fit.amplitude = (*hi - *lo) / 2;

    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> crossings;
        for (std::size_t i = 1; i < n; ++i) {
            const double a = values[i - 1] - fit.center;
            const double b = values[i] - fit.center;
            if ((a < 0.0 && b >= 0.0) || (a >= 0.0 && b < 0.0)) {
                const double frac = a / (a - b);
                crossings.push_back(times[i - 1] + frac * (times[i] - times[i - 1]));
            }
        }
        fit.crossings = crossings.size();
        if (crossings.size() < 3) {
            fit.period.reset();
            return fit;
        }
        const double period = 2.0 * (crossings.back() - crossings.front()) /
                              static_cast<double>(crossings.size() - 1);
        fit.period = period;

        const double omega = 2.0 * M_PI / period;
        Eigen::MatrixXd design(static_cast<Eigen::Index>(n), 3);
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = static_cast<Eigen::Index>(i);
            design(row, 0) = 1.0;
            design(row, 1) = std::cos(omega * times[i]);
            design(row, 2) = std::sin(omega * times[i]);
            rhs(row) = values[i];
        }
        const Eigen::Vector3d coeffs = design.colPivHouseholderQr().solve(rhs);
        fit.center = coeffs(0);
        fit.amplitude = std::hypot(coeffs(1), coeffs(2));
    }
    return fit;
}

} // namespace vacuum
