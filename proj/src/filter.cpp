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

#include "vacuum/filter.hpp"

#include "vacuum/error.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace vacuum {

namespace {

std::vector<Qubit> system_qubits(std::size_t joint_qubits, std::size_t system_size) {
    std::vector<Qubit> qubits(system_size);
    std::iota(qubits.begin(), qubits.end(), Qubit{joint_qubits - system_size});
    return qubits;
}

complex_t i_power(unsigned k) {
    static constexpr complex_t powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[k & 3U];
}

complex_t integer_power(complex_t base, unsigned exponent) {
    complex_t result{1.0, 0.0};
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace

void FilterConfig::validate() const {
    if (num_ancillas == 0) {
        throw DomainError("filter needs at least one ancilla");
    }
    if (num_ancillas > 16) {
        throw DomainError("filter supports at most 16 ancillas");
    }
    if (!powers.empty() && powers.size() != num_ancillas) {
        throw DomainError("filter.powers has " + std::to_string(powers.size()) +
                          " entries for " + std::to_string(num_ancillas) +
                          " ancillas");
    }
    for (unsigned p : powers) {
        if (p == 0) {
            throw DomainError("filter powers must be strictly positive");
        }
    }
    if (!std::isfinite(theta)) {
        throw DomainError("filter theta must be finite");
    }
}

std::vector<unsigned> FilterConfig::resolved_powers() const {
    validate();
    if (!powers.empty()) {
        return powers;
    }
    std::vector<unsigned> out(num_ancillas);
    for (std::size_t j = 0; j < num_ancillas; ++j) {
        out[j] = 1U << j;
    }
    return out;
}

StateVector tag_circuit_one_qubit(const StateVector &joint, const Spectrum &spectrum) {
    if (joint.num_qubits() != 2) {
        throw DomainError("tagging circuit expects one ancilla and one system qubit");
    }
    if (spectrum.dimension() != 2) {
        throw DomainError("tagging circuit expects a one-qubit spectrum");
    }
    if (spectrum.degenerate_ground) {
        throw DomainError("tagging circuit needs a non-degenerate spectrum");
    }
    const Qubit ancilla[1] = {0};
    const double excited = outcome_probability(joint, ancilla, BitString("1"));
    if (excited > 1e-10) {
        throw ValidationError("ancilla is not in |0> (population " +
                              std::to_string(excited) + " on |1>)");
    }
    // V = sum_j |j><E_j|
    const GateMatrix to_eigenbasis(spectrum.eigenvectors.adjoint());
    StateVector out = joint;
    out.apply(to_eigenbasis, {1});
    out.apply_controlled({1}, gates::pauli_x(), {0});
    out.apply(to_eigenbasis.adjoint(), {1});
    return out;
}

double estimate_e0(const StateVector &state, const PauliSum &h) {
    return expectation(state, h);
}

EstimateResult estimate_e0(const StateVector &state, const PauliSum &h,
                           const Estimation &mode) {
    return estimate(state, h, mode);
}

double choose_theta(double e0_prime) {
    if (!(std::abs(e0_prime) >= 1e-9)) {
        throw DomainError("cannot choose theta: |E0'| = " +
                          std::to_string(std::abs(e0_prime)) + " < 1e-9");
    }
    return M_PI / e0_prime;
}

StateVector controlled_u_power(StateVector joint, Qubit ancilla,
                               const Spectrum &spectrum, double theta, unsigned k) {
    if (k == 0) {
        throw DomainError("controlled power must be >= 1");
    }
    std::size_t system_size = 0;
    while ((std::size_t{1} << system_size) < spectrum.dimension()) {
        ++system_size;
    }
    if (system_size >= joint.num_qubits()) {
        throw DomainError("joint register has no room for a control qubit");
    }
    const auto targets = system_qubits(joint.num_qubits(), system_size);
    const GateMatrix power =
        evolution_unitary(spectrum, static_cast<double>(k) * theta / 2.0)
            .with_phase(i_power(k));
    const Qubit controls[1] = {ancilla};
    joint.apply_controlled(controls, power, targets);
    return joint;
}

StateVector controlled_u_power(StateVector joint, Qubit ancilla, const PauliSum &h,
                               double theta, unsigned k) {
    return controlled_u_power(std::move(joint), ancilla, exact_diagonalize(h),
                              theta, k);
}

complex_t filter_amplitude(double energy, double theta, const FilterConfig &config) {
    const complex_t z = complex_t{0.0, 1.0} * std::polar(1.0, -energy * theta / 2.0);
    complex_t amplitude{1.0, 0.0};
    for (unsigned p : config.resolved_powers()) {
        amplitude *= (1.0 + integer_power(z, p)) / 2.0;
    }
    return amplitude;
}

FilterOutcome apply_filter(const StateVector &system_state, const PauliSum &h,
                           const FilterConfig &config, bool discard) {
    const auto powers = config.resolved_powers();
    if (h.num_qubits() != system_state.num_qubits()) {
        throw DomainError("Hamiltonian width does not match the system register");
    }
    const Spectrum spectrum = exact_diagonalize(h);
    const std::size_t m = config.num_ancillas;

    StateVector joint = StateVector::basis(m, 0).tensor(system_state);
    std::vector<Qubit> ancillas(m);
    std::iota(ancillas.begin(), ancillas.end(), Qubit{0});

    const GateMatrix h_gate = gates::hadamard();
    for (Qubit a : ancillas) {
        joint.apply(h_gate, {a});
    }
    for (std::size_t j = 0; j < m; ++j) {
        joint = controlled_u_power(std::move(joint), ancillas[j], spectrum,
                                   config.theta, powers[j]);
    }
    for (Qubit a : ancillas) {
        joint.apply(h_gate, {a});
    }

    const BitString zeros = BitString::from_index(0, m);
    FilterOutcome outcome;
    if (discard) {
        auto selected = postselect(joint, ancillas, zeros);
        outcome.success_probability = selected.probability;
        outcome.refined_state = std::move(selected.collapsed);
        outcome.kept = true;
    } else {
        outcome.success_probability = outcome_probability(joint, ancillas, zeros);
        outcome.joint_state = std::move(joint);
    }
    return outcome;
}

std::string_view to_string(RefinementStatus status) noexcept {
    switch (status) {
    case RefinementStatus::converged:
        return "converged";
    case RefinementStatus::max_iterations:
        return "max_iterations";
    case RefinementStatus::aborted:
        return "aborted";
    }
    return "unknown";
}

RefinementReport refine_iteratively(const StateVector &system_state,
                                    const PauliSum &h, const RefineOptions &options) {
    if (options.max_iters == 0) {
        throw DomainError("max_iters must be >= 1");
    }
    const Spectrum spectrum = exact_diagonalize(h);
    const StateVector ground = spectrum.ground_state();

    RefinementReport report;
    StateVector state = system_state;
    report.status = RefinementStatus::max_iterations;
    for (std::size_t iter = 0; iter < options.max_iters; ++iter) {
        RefinementIteration record;
        try {
            record.e0_prime = estimate_e0(state, h);
            record.theta = options.fixed_theta ? *options.fixed_theta
                                               : choose_theta(record.e0_prime);
            FilterConfig config{options.num_ancillas, record.theta, options.powers};
            auto outcome = apply_filter(state, h, config, true);
            state = std::move(*outcome.refined_state);
            record.success_probability = outcome.success_probability;
        } catch (const Error &e) {
            report.status = RefinementStatus::aborted;
            report.message = e.what();
            break;
        }
        record.fidelity_to_ground = std::min(1.0, fidelity(state, ground));
        record.weights = eigen_overlaps(state, spectrum).weights;
        record.excited_weight = std::max(0.0, 1.0 - record.weights.front());
        report.iterations.push_back(std::move(record));
        report.final_state = state;
        if (1.0 - report.iterations.back().fidelity_to_ground <=
            options.target_infidelity) {
            report.status = RefinementStatus::converged;
            break;
        }
    }
    return report;
}

} // namespace vacuum
