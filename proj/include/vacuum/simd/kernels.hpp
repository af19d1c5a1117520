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
 * Amplitude kernels shared by the statevector: dense (optionally
 * controlled) matrix application, norms and inner products.
 *
 * Every kernel has a scalar reference implementation and, on x86-64, an
 * AVX2+FMA variant. The variant is picked once at runtime from CPU
 * capabilities; `VACUUM_REFINE_SIMD=scalar|avx2` overrides the choice.
 *
 * Kernels address amplitudes by *bit position* (bit 0 = least significant
 * bit of the amplitude index), not by qubit index. Translating qubit
 * indices to bit positions is the caller's job.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace vacuum::simd {

using complex_t = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
    Backend backend;

    /// Applies a row-major 2^k x 2^k matrix to the amplitudes addressed by
    /// `target_bits` (k entries, target_bits[0] is the most significant bit
    /// of the matrix's local index). Only index groups whose bits in
    /// `control_mask` are all set are transformed.
    void (*apply_dense)(std::span<complex_t> amplitudes,
                        std::span<const complex_t> matrix,
                        std::span<const unsigned> target_bits,
                        std::uint64_t control_mask);

    /// Single-target specialisation of apply_dense.
    void (*apply_single)(std::span<complex_t> amplitudes,
                         const complex_t (&matrix)[4], unsigned target_bit,
                         std::uint64_t control_mask);

    double (*norm_squared)(std::span<const complex_t> amplitudes);

    /// Returns <a|b> = sum conj(a_i) b_i.
    complex_t (*inner_product)(std::span<const complex_t> a,
                               std::span<const complex_t> b);
};

[[nodiscard]] bool backend_available(Backend backend) noexcept;
[[nodiscard]] std::string_view backend_name(Backend backend) noexcept;

/// Kernel table for a specific backend. Throws DomainError if the backend
/// is not available on this machine or build.
[[nodiscard]] const KernelTable &kernels(Backend backend);

/// Kernel table selected at first use (CPU detection + env override).
[[nodiscard]] const KernelTable &kernels();

namespace scalar {
void apply_dense(std::span<complex_t> amplitudes,
                 std::span<const complex_t> matrix,
                 std::span<const unsigned> target_bits,
                 std::uint64_t control_mask);
void apply_single(std::span<complex_t> amplitudes,
                  const complex_t (&matrix)[4], unsigned target_bit,
                  std::uint64_t control_mask);
double norm_squared(std::span<const complex_t> amplitudes);
complex_t inner_product(std::span<const complex_t> a,
                        std::span<const complex_t> b);
} // namespace scalar

namespace avx2 {
void apply_dense(std::span<complex_t> amplitudes,
                 std::span<const complex_t> matrix,
                 std::span<const unsigned> target_bits,
                 std::uint64_t control_mask);
void apply_single(std::span<complex_t> amplitudes,
                  const complex_t (&matrix)[4], unsigned target_bit,
                  std::uint64_t control_mask);
double norm_squared(std::span<const complex_t> amplitudes);
complex_t inner_product(std::span<const complex_t> a,
                        std::span<const complex_t> b);
} // namespace avx2

namespace detail {
/// Inserts a zero bit at each (ascending) position of `sorted_bits` into
/// `compact`, e.g. compact=0b11, bits={1} -> 0b101.
[[nodiscard]] inline std::uint64_t
spread_bits(std::uint64_t compact,
            std::span<const unsigned> sorted_bits) noexcept {
    for (unsigned bit : sorted_bits) {
        const std::uint64_t low = compact & ((std::uint64_t{1} << bit) - 1);
        compact = ((compact >> bit) << (bit + 1)) | low;
    }
    return compact;
}
} // namespace detail

} // namespace vacuum::simd
