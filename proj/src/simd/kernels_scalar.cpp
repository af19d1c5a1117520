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

// Scalar reference kernels. These define the semantics the vectorised
// variants are tested against.

#include "vacuum/simd/kernels.hpp"

#include <algorithm>
#include <vector>

namespace vacuum::simd::scalar {

namespace {

std::vector<std::size_t> group_offsets(std::span<const unsigned> target_bits) {
    const std::size_t k = target_bits.size();
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t r = 0; r < offsets.size(); ++r) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1U) {
                offsets[r] |= std::size_t{1} << target_bits[t];
            }
        }
    }
    return offsets;
}

} // namespace

void apply_dense(std::span<complex_t> amplitudes,
                 std::span<const complex_t> matrix,
                 std::span<const unsigned> target_bits,
                 std::uint64_t control_mask) {
    const std::size_t k = target_bits.size();
    const std::size_t dim = std::size_t{1} << k;
    const std::size_t groups = amplitudes.size() >> k;

    std::vector<unsigned> sorted(target_bits.begin(), target_bits.end());
    std::sort(sorted.begin(), sorted.end());
    const auto offsets = group_offsets(target_bits);

    std::vector<complex_t> gathered(dim);
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = detail::spread_bits(g, sorted);
        if ((base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            gathered[c] = amplitudes[base + offsets[c]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            complex_t acc{0.0, 0.0};
            const complex_t *row = matrix.data() + r * dim;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * gathered[c];
            }
            amplitudes[base + offsets[r]] = acc;
        }
    }
}

void apply_single(std::span<complex_t> amplitudes,
                  const complex_t (&matrix)[4], unsigned target_bit,
                  std::uint64_t control_mask) {
    const std::size_t stride = std::size_t{1} << target_bit;
    const std::size_t half = amplitudes.size() / 2;
    const unsigned bits[1] = {target_bit};
    for (std::size_t g = 0; g < half; ++g) {
        const std::size_t i0 = detail::spread_bits(g, bits);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        const std::size_t i1 = i0 + stride;
        const complex_t a0 = amplitudes[i0];
        const complex_t a1 = amplitudes[i1];
        amplitudes[i0] = matrix[0] * a0 + matrix[1] * a1;
        amplitudes[i1] = matrix[2] * a0 + matrix[3] * a1;
    }
}

double norm_squared(std::span<const complex_t> amplitudes) {
    double sum = 0.0;
    for (const auto &a : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

complex_t inner_product(std::span<const complex_t> a,
                        std::span<const complex_t> b) {
    complex_t sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

} // namespace vacuum::simd::scalar
