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

#include "vacuum/pauli.hpp"

#include "vacuum/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace vacuum {

namespace {

std::string format_coefficient(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int group_rank(const PauliString &s) {
    if (s.is_diagonal()) {
        return 0;
    }
    if (s.is_x_type()) {
        return 1;
    }
    return 2;
}

} // namespace

PauliString::PauliString(std::string_view symbols)
    : num_qubits_(symbols.size()) {
    if (symbols.empty() || symbols.size() > 64) {
        throw DomainError("Pauli string must have 1..64 symbols, got " +
                          std::to_string(symbols.size()));
    }
    for (std::size_t q = 0; q < symbols.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (num_qubits_ - 1 - q);
        switch (symbols[q]) {
        case 'I':
            break;
        case 'X':
            x_mask_ |= bit;
            break;
        case 'Y':
            x_mask_ |= bit;
            z_mask_ |= bit;
            break;
        case 'Z':
            z_mask_ |= bit;
            break;
        default:
            throw DomainError("invalid Pauli symbol '" +
                              std::string(1, symbols[q]) + "' in \"" +
                              std::string(symbols) + "\"");
        }
    }
}

PauliString PauliString::identity(std::size_t num_qubits) {
    return PauliString(std::string(num_qubits, 'I'));
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit,
                                char op) {
    if (qubit >= num_qubits) {
        throw DomainError("qubit " + std::to_string(qubit) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    std::string symbols(num_qubits, 'I');
    symbols[qubit] = op;
    return PauliString(symbols);
}

char PauliString::symbol(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw DomainError("qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    const bool x = (x_mask_ & bit) != 0;
    const bool z = (z_mask_ & bit) != 0;
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    return z ? 'Z' : 'I';
}

std::string PauliString::to_string() const {
    std::string out(num_qubits_, 'I');
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        out[q] = symbol(q);
    }
    return out;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> qubits;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        if (symbol(q) != 'I') {
            qubits.push_back(q);
        }
    }
    return qubits;
}

std::complex<double> PauliString::phase(std::uint64_t index) const noexcept {
    // Y = i X Z: a factor i per Y, and (-1) per set bit under Z or Y.
    static constexpr std::complex<double> i_powers[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int y_count = std::popcount(x_mask_ & z_mask_);
    const int sign_flips = std::popcount(index & z_mask_);
    return i_powers[(y_count + 2 * sign_flips) & 3];
}

PauliSum::PauliSum(std::size_t num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits) {
    for (const auto &term : terms) {
        add_term(term.coefficient, term.string);
    }
}

double PauliSum::coefficient(const PauliString &string) const {
    for (const auto &term : terms_) {
        if (term.string == string) {
            return term.coefficient;
        }
    }
    return 0.0;
}

void PauliSum::add_term(double coefficient, const PauliString &string) {
    if (string.num_qubits() != num_qubits_) {
        throw DomainError("Pauli string \"" + string.to_string() +
                          "\" does not act on " + std::to_string(num_qubits_) +
                          " qubits");
    }
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const PauliTerm &t) { return t.string == string; });
    if (it == terms_.end()) {
        if (coefficient != 0.0) {
            terms_.push_back({coefficient, string});
        }
        return;
    }
    it->coefficient += coefficient;
    if (it->coefficient == 0.0) {
        terms_.erase(it);
    }
}

PauliSum PauliSum::scaled(double factor) const {
    PauliSum out(num_qubits_);
    for (const auto &term : terms_) {
        out.add_term(factor * term.coefficient, term.string);
    }
    return out;
}

std::vector<PauliTerm> PauliSum::product_ordered_terms() const {
    std::vector<PauliTerm> ordered = terms_;
    std::sort(ordered.begin(), ordered.end(),
              [](const PauliTerm &a, const PauliTerm &b) {
                  const int ra = group_rank(a.string);
                  const int rb = group_rank(b.string);
                  if (ra != rb) {
                      return ra < rb;
                  }
                  return a.string.to_string() < b.string.to_string();
              });
    return ordered;
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const auto &term : terms_) {
        out += format_coefficient(term.coefficient);
        out += ' ';
        out += term.string.to_string();
        out += '\n';
    }
    return out;
}

PauliSum PauliSum::parse(std::string_view text) {
    std::vector<std::pair<double, std::string>> parsed;
    std::size_t line_number = 0;
    std::size_t width = 0;
    while (!text.empty()) {
        ++line_number;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{}
                                                 : text.substr(newline + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) {
            throw ConfigError("expected '<coeff> <pauli string>'", line_number);
        }
        const std::string_view coeff_text = line.substr(0, space);
        const std::string_view symbols = trim(line.substr(space));

        double coeff = 0.0;
        const auto [ptr, ec] = std::from_chars(
            coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
        if (ec != std::errc{} || ptr != coeff_text.data() + coeff_text.size()) {
            throw ConfigError("invalid coefficient '" + std::string(coeff_text) +
                                  "'",
                              line_number);
        }
        if (symbols.empty() ||
            symbols.find_first_not_of("IXYZ") != std::string_view::npos) {
            throw ConfigError("invalid Pauli string '" + std::string(symbols) +
                                  "'",
                              line_number);
        }
        if (width == 0) {
            width = symbols.size();
        } else if (symbols.size() != width) {
            throw ConfigError("Pauli string '" + std::string(symbols) +
                                  "' has length " +
                                  std::to_string(symbols.size()) +
                                  ", expected " + std::to_string(width),
                              line_number);
        }
        parsed.emplace_back(coeff, std::string(symbols));
    }
    if (width == 0) {
        throw ConfigError("Pauli sum has no terms");
    }
    PauliSum sum(width);
    for (const auto &[coeff, symbols] : parsed) {
        sum.add_term(coeff, PauliString(symbols));
    }
    return sum;
}

bool operator==(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits_ != b.num_qubits_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    std::map<std::string, double> lhs;
    for (const auto &t : a.terms_) {
        lhs[t.string.to_string()] = t.coefficient;
    }
    for (const auto &t : b.terms_) {
        auto it = lhs.find(t.string.to_string());
        if (it == lhs.end() || it->second != t.coefficient) {
            return false;
        }
    }
    return true;
}

PauliSum operator+(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("cannot add Pauli sums on " +
                          std::to_string(a.num_qubits()) + " and " +
                          std::to_string(b.num_qubits()) + " qubits");
    }
    PauliSum out = a;
    for (const auto &term : b.terms()) {
        out.add_term(term.coefficient, term.string);
    }
    return out;
}

PauliSum operator*(double factor, const PauliSum &sum) {
    return sum.scaled(factor);
}

std::ostream &operator<<(std::ostream &os, const PauliString &string) {
    return os << string.to_string();
}

std::ostream &operator<<(std::ostream &os, const PauliSum &sum) {
    bool first = true;
    for (const auto &term : sum.terms()) {
        os << (first ? "" : " + ") << term.coefficient << "*" << term.string;
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os;
}

} // namespace vacuum
