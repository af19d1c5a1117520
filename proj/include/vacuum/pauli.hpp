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
 * Pauli strings and real-weighted Pauli sums.
 *
 * Qubit 0 is the leftmost symbol of a string and the most significant bit
 * of an amplitude index, so "XZ" means X on qubit 0 and Z on qubit 1, and
 * its masks use bit (num_qubits - 1 - q) for qubit q.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vacuum {

class PauliString {
  public:
    PauliString() = default;

    /// Parses a string over {I, X, Y, Z}. Throws DomainError on any other
    /// symbol or an empty string; at most 64 qubits.
    explicit PauliString(std::string_view symbols);

    /// Identity on `num_qubits` qubits.
    static PauliString identity(std::size_t num_qubits);

    /// Single non-identity symbol `op` on `qubit`.
    static PauliString single(std::size_t num_qubits, std::size_t qubit,
                              char op);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_mask_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_mask_; }

    [[nodiscard]] char symbol(std::size_t qubit) const;
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool is_identity() const noexcept {
        return x_mask_ == 0 && z_mask_ == 0;
    }
    /// Only I and Z symbols.
    [[nodiscard]] bool is_diagonal() const noexcept { return x_mask_ == 0; }
    /// Only I and X symbols.
    [[nodiscard]] bool is_x_type() const noexcept { return z_mask_ == 0; }

    /// Qubits carrying a non-identity symbol, ascending.
    [[nodiscard]] std::vector<std::size_t> support() const;

    /// Phase p(i) with P|i> = p(i) |i ^ x_mask>.
    [[nodiscard]] std::complex<double> phase(std::uint64_t index) const noexcept;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend auto operator<=>(const PauliString &a, const PauliString &b) {
        return a.to_string() <=> b.to_string();
    }

  private:
    std::size_t num_qubits_ = 0;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/**
 * Hermitian operator sum_k c_k P_k with real c_k.
 *
 * Like strings are merged on construction and terms whose merged
 * coefficient is exactly zero are dropped. Term order is first occurrence.
 */
class PauliSum {
  public:
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}
    PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }

    /// Coefficient of `string` (0 if absent).
    [[nodiscard]] double coefficient(const PauliString &string) const;
    [[nodiscard]] double coefficient(std::string_view symbols) const {
        return coefficient(PauliString(symbols));
    }

    void add_term(double coefficient, const PauliString &string);

    [[nodiscard]] PauliSum scaled(double factor) const;

    /// Terms in the fixed first-order product order: diagonal (I/Z only)
    /// strings first, then X-type (I/X only), then the rest; lexicographic
    /// by symbols within each group.
    [[nodiscard]] std::vector<PauliTerm> product_ordered_terms() const;

    /// Text form, one `<coeff> <string>` line per term.
    [[nodiscard]] std::string to_text() const;

    /// Parses the text form. Blank lines and `#` comments are ignored.
    /// Throws ConfigError carrying the offending line number.
    static PauliSum parse(std::string_view text);

    friend bool operator==(const PauliSum &a, const PauliSum &b);

  private:
    std::size_t num_qubits_;
    std::vector<PauliTerm> terms_;
};

PauliSum operator+(const PauliSum &a, const PauliSum &b);
PauliSum operator*(double factor, const PauliSum &sum);

std::ostream &operator<<(std::ostream &os, const PauliString &string);
std::ostream &operator<<(std::ostream &os, const PauliSum &sum);

} // namespace vacuum
