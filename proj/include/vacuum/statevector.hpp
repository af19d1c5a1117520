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
 * Dense statevector over n qubits.
 *
 * Ordering convention: qubit 0 is the leftmost ket symbol and the most
 * significant bit of the amplitude index, so |q0 q1 ... q_{n-1}> lives at
 * index sum_q q_k 2^(n-1-k). The same convention applies to BitString.
 */

#include "vacuum/gate.hpp"
#include "vacuum/pauli.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum {

using Qubit = std::size_t;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kImpossibleOutcome = 1e-12;

/// Measurement outcome; bit 0 belongs to the first measured qubit.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::string_view bits);
    static BitString from_index(std::uint64_t value, std::size_t width);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i] != 0; }
    /// First bit is the most significant.
    [[nodiscard]] std::uint64_t to_index() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const BitString &, const BitString &) = default;

  private:
    std::vector<std::uint8_t> bits_;
};

using Histogram = std::map<BitString, std::uint64_t>;

class StateVector {
  public:
    /// |index> on `num_qubits` qubits.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);

    /// Takes ownership of `amplitudes`; the length must be 2^n with n >= 1
    /// and the norm within `tolerance` of 1.
    static StateVector from_amplitudes(std::vector<complex_t> amplitudes,
                                       double tolerance = kNormTolerance);

    /// Like from_amplitudes but rescales to unit norm first.
    static StateVector normalized(std::vector<complex_t> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] complex_t amplitude(std::uint64_t index) const {
        return amplitudes_.at(index);
    }
    [[nodiscard]] double norm_squared() const;

    StateVector &apply(const GateMatrix &gate, std::span<const Qubit> targets);
    StateVector &apply(const GateMatrix &gate,
                       std::initializer_list<Qubit> targets) {
        return apply(gate, std::span<const Qubit>(targets.begin(), targets.size()));
    }

    /// Applies `gate` on the subspace where every control qubit is |1>.
    /// A global phase on `gate` becomes a relative phase and is kept.
    StateVector &apply_controlled(std::span<const Qubit> controls,
                                  const GateMatrix &gate,
                                  std::span<const Qubit> targets);
    StateVector &apply_controlled(std::initializer_list<Qubit> controls,
                                  const GateMatrix &gate,
                                  std::initializer_list<Qubit> targets) {
        return apply_controlled(
            std::span<const Qubit>(controls.begin(), controls.size()), gate,
            std::span<const Qubit>(targets.begin(), targets.size()));
    }

    /// |psi> <- P |psi>.
    StateVector &apply_pauli(const PauliString &string);

    /// |psi> <- exp(-i angle P) |psi> = cos(angle)|psi> - i sin(angle) P|psi>.
    StateVector &apply_pauli_exponential(const PauliString &string,
                                         double angle);

    /// this (leading qubits) tensor `trailing`.
    [[nodiscard]] StateVector tensor(const StateVector &trailing) const;

  private:
    StateVector(std::size_t num_qubits, std::vector<complex_t> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    [[nodiscard]] unsigned bit_of(Qubit q) const noexcept {
        return static_cast<unsigned>(num_qubits_ - 1 - q);
    }
    void check_gate_operands(std::span<const Qubit> controls,
                             const GateMatrix &gate,
                             std::span<const Qubit> targets) const;

    std::size_t num_qubits_;
    std::vector<complex_t> amplitudes_;
};

[[nodiscard]] StateVector basis_state(std::size_t num_qubits,
                                      std::uint64_t index);
[[nodiscard]] StateVector apply_gate(StateVector state, const GateMatrix &gate,
                                     std::span<const Qubit> targets);
[[nodiscard]] StateVector apply_controlled(StateVector state,
                                           std::span<const Qubit> controls,
                                           const GateMatrix &gate,
                                           std::span<const Qubit> targets);

struct PostSelection {
    double probability;
    /// Renormalised state on the unmeasured qubits (original order kept).
    StateVector collapsed;
};

/// Projects `qubits` onto `outcome` and removes them from the register.
/// Throws ImpossibleOutcomeError when the probability is below 1e-12 and
/// DomainError if every qubit would be removed.
[[nodiscard]] PostSelection postselect(const StateVector &state,
                                       std::span<const Qubit> qubits,
                                       const BitString &outcome);

/// Born probability of `outcome` on `qubits`, without collapsing.
[[nodiscard]] double outcome_probability(const StateVector &state,
                                         std::span<const Qubit> qubits,
                                         const BitString &outcome);

/// Marginal Born distribution of `qubits`, indexed by BitString::to_index.
[[nodiscard]] std::vector<double>
marginal_distribution(const StateVector &state, std::span<const Qubit> qubits);

/// Draws `shots` i.i.d. outcomes of measuring `qubits`. Shots are split into
/// a fixed number of chunks with seeds derive_seed(seed, chunk), so the
/// histogram depends only on (state, qubits, shots, seed), not on the
/// worker count.
[[nodiscard]] Histogram measure_sample(const StateVector &state,
                                       std::span<const Qubit> qubits,
                                       std::uint64_t shots, std::uint64_t seed);

/// <psi|O|psi>, exact. Throws NumericalError if the imaginary residue
/// exceeds 1e-8.
[[nodiscard]] double expectation(const StateVector &state,
                                 const PauliSum &observable);

/// <bra|O|ket>.
[[nodiscard]] complex_t matrix_element(const StateVector &bra,
                                       const PauliSum &observable,
                                       const StateVector &ket);

/// <a|b>.
[[nodiscard]] complex_t inner_product(const StateVector &a,
                                      const StateVector &b);

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

} // namespace vacuum
