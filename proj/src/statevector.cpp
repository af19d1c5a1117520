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

#include "vacuum/statevector.hpp"

#include "vacuum/error.hpp"
#include "vacuum/rng.hpp"
#include "vacuum/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace vacuum {

namespace {

constexpr std::size_t kMaxQubits = 30;
constexpr std::size_t kSampleChunks = 8;

void check_qubit_list(std::span<const Qubit> qubits, std::size_t num_qubits,
                      const char *what) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= num_qubits) {
            throw DomainError(std::string(what) + " qubit " +
                              std::to_string(qubits[i]) + " out of range for " +
                              std::to_string(num_qubits) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw DomainError(std::string("duplicate ") + what + " qubit " +
                                  std::to_string(qubits[i]));
            }
        }
    }
}

std::uint64_t outcome_bits(std::span<const Qubit> qubits, std::size_t num_qubits,
                           std::uint64_t index) {
    std::uint64_t value = 0;
    for (Qubit q : qubits) {
        value = (value << 1) | ((index >> (num_qubits - 1 - q)) & 1U);
    }
    return value;
}

/// Multinomial draw by sequential conditional binomials.
std::vector<std::uint64_t> draw_counts(std::span<const double> probabilities,
                                       std::uint64_t shots, std::uint64_t seed) {
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    auto engine = make_engine(seed);
    std::uint64_t remaining = shots;
    double remaining_mass = 1.0;
    for (std::size_t k = 0; k < probabilities.size() && remaining > 0; ++k) {
        if (k + 1 == probabilities.size()) {
            counts[k] = remaining;
            break;
        }
        const double p = remaining_mass > 0.0
                             ? std::clamp(probabilities[k] / remaining_mass, 0.0, 1.0)
                             : 0.0;
        std::binomial_distribution<std::int64_t> binomial(
            static_cast<std::int64_t>(remaining), p);
        const auto drawn = static_cast<std::uint64_t>(binomial(engine));
        counts[k] = drawn;
        remaining -= drawn;
        remaining_mass -= probabilities[k];
    }
    return counts;
}

} // namespace

BitString::BitString(std::string_view bits) {
    bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw DomainError("bit string may only contain '0' and '1'");
        }
        bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

BitString BitString::from_index(std::uint64_t value, std::size_t width) {
    BitString out;
    out.bits_.resize(width);
    for (std::size_t i = 0; i < width; ++i) {
        out.bits_[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1U);
    }
    return out;
}

std::uint64_t BitString::to_index() const noexcept {
    std::uint64_t value = 0;
    for (auto b : bits_) {
        value = (value << 1) | b;
    }
    return value;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw DomainError("number of qubits must be in 1.." +
                          std::to_string(kMaxQubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw DomainError("basis index " + std::to_string(index) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    std::vector<complex_t> amplitudes(dim, complex_t{0.0, 0.0});
    amplitudes[index] = 1.0;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(std::vector<complex_t> amplitudes,
                                         double tolerance) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw DomainError("amplitude count must be a power of two >= 2, got " +
                          std::to_string(dim));
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if (n > kMaxQubits) {
        throw DomainError("register too large");
    }
    const double norm = simd::kernels().norm_squared(amplitudes);
    if (!(std::abs(norm - 1.0) <= tolerance)) {
        throw ValidationError("state is not normalised (norm^2 = " +
                              std::to_string(norm) + ")");
    }
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<complex_t> amplitudes) {
    const double norm = simd::kernels().norm_squared(amplitudes);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("cannot normalise a zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return from_amplitudes(std::move(amplitudes));
}

double StateVector::norm_squared() const {
    return simd::kernels().norm_squared(amplitudes_);
}

void StateVector::check_gate_operands(std::span<const Qubit> controls,
                                      const GateMatrix &gate,
                                      std::span<const Qubit> targets) const {
    if (targets.size() != gate.arity()) {
        throw DomainError("gate of arity " + std::to_string(gate.arity()) +
                          " given " + std::to_string(targets.size()) +
                          " targets");
    }
    check_qubit_list(targets, num_qubits_, "target");
    check_qubit_list(controls, num_qubits_, "control");
    for (Qubit c : controls) {
        if (std::find(targets.begin(), targets.end(), c) != targets.end()) {
            throw DomainError("qubit " + std::to_string(c) +
                              " is both control and target");
        }
    }
}

StateVector &StateVector::apply(const GateMatrix &gate,
                                std::span<const Qubit> targets) {
    return apply_controlled({}, gate, targets);
}

StateVector &StateVector::apply_controlled(std::span<const Qubit> controls,
                                           const GateMatrix &gate,
                                           std::span<const Qubit> targets) {
    check_gate_operands(controls, gate, targets);
    std::uint64_t control_mask = 0;
    for (Qubit c : controls) {
        control_mask |= std::uint64_t{1} << bit_of(c);
    }
    const auto &k = simd::kernels();
    const DenseMatrix &m = gate.matrix();
    if (gate.arity() == 1) {
        const complex_t entries[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
        k.apply_single(amplitudes_, entries, bit_of(targets[0]), control_mask);
        return *this;
    }
    std::vector<unsigned> bits;
    bits.reserve(targets.size());
    for (Qubit t : targets) {
        bits.push_back(bit_of(t));
    }
    k.apply_dense(amplitudes_,
                  std::span<const complex_t>(m.data(), static_cast<std::size_t>(m.size())),
                  bits, control_mask);
    return *this;
}

StateVector &StateVector::apply_pauli(const PauliString &string) {
    if (string.num_qubits() != num_qubits_) {
        throw DomainError("Pauli string width does not match the register");
    }
    std::vector<complex_t> out(amplitudes_.size());
    const std::uint64_t flip = string.x_mask();
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        out[i ^ flip] = string.phase(i) * amplitudes_[i];
    }
    amplitudes_ = std::move(out);
    return *this;
}

StateVector &StateVector::apply_pauli_exponential(const PauliString &string,
                                                  double angle) {
    if (string.num_qubits() != num_qubits_) {
        throw DomainError("Pauli string width does not match the register");
    }
    const double c = std::cos(angle);
    const complex_t minus_i_s{0.0, -std::sin(angle)};
    if (string.is_identity()) {
        const complex_t phase{c, -std::sin(angle)};
        for (auto &a : amplitudes_) {
            a *= phase;
        }
        return *this;
    }
    std::vector<complex_t> out(amplitudes_.size());
    const std::uint64_t flip = string.x_mask();
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        // (P psi)[i ^ flip] = phase(i) psi[i]
        out[i ^ flip] += minus_i_s * string.phase(i) * amplitudes_[i];
        out[i] += c * amplitudes_[i];
    }
    amplitudes_ = std::move(out);
    return *this;
}

StateVector StateVector::tensor(const StateVector &trailing) const {
    if (num_qubits_ + trailing.num_qubits_ > kMaxQubits) {
        throw DomainError("register too large");
    }
    std::vector<complex_t> out(amplitudes_.size() * trailing.amplitudes_.size());
    std::size_t k = 0;
    for (const auto &a : amplitudes_) {
        for (const auto &b : trailing.amplitudes_) {
            out[k++] = a * b;
        }
    }
    return StateVector(num_qubits_ + trailing.num_qubits_, std::move(out));
}

StateVector basis_state(std::size_t num_qubits, std::uint64_t index) {
    return StateVector::basis(num_qubits, index);
}

StateVector apply_gate(StateVector state, const GateMatrix &gate,
                       std::span<const Qubit> targets) {
    state.apply(gate, targets);
    return state;
}

StateVector apply_controlled(StateVector state, std::span<const Qubit> controls,
                             const GateMatrix &gate,
                             std::span<const Qubit> targets) {
    state.apply_controlled(controls, gate, targets);
    return state;
}

double outcome_probability(const StateVector &state,
                           std::span<const Qubit> qubits,
                           const BitString &outcome) {
    check_qubit_list(qubits, state.num_qubits(), "measured");
    if (outcome.size() != qubits.size()) {
        throw DomainError("outcome length does not match the measured qubits");
    }
    const std::uint64_t wanted = outcome.to_index();
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (outcome_bits(qubits, state.num_qubits(), i) == wanted) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

PostSelection postselect(const StateVector &state, std::span<const Qubit> qubits,
                         const BitString &outcome) {
    const double p = outcome_probability(state, qubits, outcome);
    if (qubits.size() >= state.num_qubits()) {
        throw DomainError("post-selection must leave at least one qubit");
    }
    if (!(p >= kImpossibleOutcome)) {
        throw ImpossibleOutcomeError("post-selected outcome " + outcome.to_string() +
                                     " has probability " + std::to_string(p));
    }
    const std::size_t n = state.num_qubits();
    std::vector<Qubit> kept;
    for (Qubit q = 0; q < n; ++q) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            kept.push_back(q);
        }
    }
    const std::uint64_t wanted = outcome.to_index();
    const double scale = 1.0 / std::sqrt(p);
    const auto amps = state.amplitudes();
    std::vector<complex_t> collapsed(std::size_t{1} << kept.size());
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (outcome_bits(qubits, n, i) == wanted) {
            collapsed[outcome_bits(kept, n, i)] = amps[i] * scale;
        }
    }
    return {p, StateVector::from_amplitudes(std::move(collapsed))};
}

std::vector<double> marginal_distribution(const StateVector &state,
                                          std::span<const Qubit> qubits) {
    check_qubit_list(qubits, state.num_qubits(), "measured");
    if (qubits.empty() || qubits.size() > 20) {
        throw DomainError("must measure between 1 and 20 qubits");
    }
    std::vector<double> probabilities(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        probabilities[outcome_bits(qubits, state.num_qubits(), i)] += std::norm(amps[i]);
    }
    return probabilities;
}

Histogram measure_sample(const StateVector &state, std::span<const Qubit> qubits,
                         std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shots must be >= 1");
    }
    const auto probabilities = marginal_distribution(state, qubits);

    std::vector<std::vector<std::uint64_t>> chunk_counts(kSampleChunks);
    auto run_chunk = [&](std::size_t c) {
        const std::uint64_t chunk_shots =
            shots / kSampleChunks + (c < shots % kSampleChunks ? 1 : 0);
        chunk_counts[c] = chunk_shots == 0
                              ? std::vector<std::uint64_t>(probabilities.size(), 0)
                              : draw_counts(probabilities, chunk_shots,
                                            derive_seed(seed, c));
    };

    const std::size_t workers = std::min(worker_count(), kSampleChunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < kSampleChunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < kSampleChunks; c += workers) {
                    run_chunk(c);
                }
            });
        }
    }

    Histogram histogram;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        std::uint64_t total = 0;
        for (const auto &counts : chunk_counts) {
            total += counts[k];
        }
        if (total > 0) {
            histogram[BitString::from_index(k, qubits.size())] = total;
        }
    }
    return histogram;
}

complex_t matrix_element(const StateVector &bra, const PauliSum &observable,
                         const StateVector &ket) {
    if (bra.num_qubits() != ket.num_qubits() ||
        observable.num_qubits() != ket.num_qubits()) {
        throw DomainError("observable acts on " +
                          std::to_string(observable.num_qubits()) +
                          " qubits but the states have " +
                          std::to_string(bra.num_qubits()) + " and " +
                          std::to_string(ket.num_qubits()));
    }
    const auto a = bra.amplitudes();
    const auto b = ket.amplitudes();
    complex_t total{0.0, 0.0};
    for (const auto &term : observable.terms()) {
        const std::uint64_t flip = term.string.x_mask();
        complex_t acc{0.0, 0.0};
        for (std::uint64_t i = 0; i < b.size(); ++i) {
            acc += std::conj(a[i ^ flip]) * term.string.phase(i) * b[i];
        }
        total += term.coefficient * acc;
    }
    return total;
}

double expectation(const StateVector &state, const PauliSum &observable) {
    const complex_t value = matrix_element(state, observable, state);
    if (std::abs(value.imag()) > 1e-8) {
        throw NumericalError("expectation value has imaginary residue " +
                             std::to_string(value.imag()));
    }
    return value.real();
}

complex_t inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("register size mismatch: " +
                          std::to_string(a.num_qubits()) + " vs " +
                          std::to_string(b.num_qubits()));
    }
    return simd::kernels().inner_product(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

} // namespace vacuum
