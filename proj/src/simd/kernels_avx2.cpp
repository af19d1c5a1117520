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

// AVX2 + FMA kernels. Each __m256d holds two packed complex doubles
// laid out as [re0, im0, re1, im1].

#include "vacuum/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace vacuum::simd::avx2 {

namespace {

inline double *as_doubles(complex_t *p) { return reinterpret_cast<double *>(p); }
inline const double *as_doubles(const complex_t *p) {
    return reinterpret_cast<const double *>(p);
}

/// Multiplies both packed complex numbers of `v` by the scalar (re, im).
inline __m256d mul_by_scalar(__m256d v, __m256d re, __m256d im) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(swapped, im));
}

/// Lane-wise complex product.
inline __m256d mul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0b1111);
    const __m256d a_swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swapped, b_im));
}

inline __m256d broadcast(complex_t c) {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

} // namespace

void apply_single(std::span<complex_t> amplitudes,
                  const complex_t (&matrix)[4], unsigned target_bit,
                  std::uint64_t control_mask) {
    const std::size_t half = amplitudes.size() / 2;
    const unsigned bits[1] = {target_bit};

    if (target_bit == 0) {
        // Pairs (i, i+1) share one register.
        const __m256d col0 = _mm256_setr_pd(matrix[0].real(), matrix[0].imag(),
                                            matrix[2].real(), matrix[2].imag());
        const __m256d col1 = _mm256_setr_pd(matrix[1].real(), matrix[1].imag(),
                                            matrix[3].real(), matrix[3].imag());
        for (std::size_t g = 0; g < half; ++g) {
            const std::size_t i0 = g << 1;
            if ((i0 & control_mask) != control_mask) {
                continue;
            }
            double *p = as_doubles(amplitudes.data() + i0);
            const __m256d v = _mm256_loadu_pd(p);
            const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(p, _mm256_add_pd(mul(col0, lo), mul(col1, hi)));
        }
        return;
    }

    if ((control_mask & 1U) != 0) {
        // Neighbouring groups differ in control status; no pairing possible.
        scalar::apply_single(amplitudes, matrix, target_bit, control_mask);
        return;
    }

    const std::size_t stride = std::size_t{1} << target_bit;
    const __m256d m00r = _mm256_set1_pd(matrix[0].real());
    const __m256d m00i = _mm256_set1_pd(matrix[0].imag());
    const __m256d m01r = _mm256_set1_pd(matrix[1].real());
    const __m256d m01i = _mm256_set1_pd(matrix[1].imag());
    const __m256d m10r = _mm256_set1_pd(matrix[2].real());
    const __m256d m10i = _mm256_set1_pd(matrix[2].imag());
    const __m256d m11r = _mm256_set1_pd(matrix[3].real());
    const __m256d m11i = _mm256_set1_pd(matrix[3].imag());

    // Groups g and g+1 (g even) map to adjacent indices i0, i0+1.
    for (std::size_t g = 0; g < half; g += 2) {
        const std::size_t i0 = detail::spread_bits(g, bits);
        if ((i0 & control_mask) != control_mask) {
            continue;
        }
        double *p0 = as_doubles(amplitudes.data() + i0);
        double *p1 = as_doubles(amplitudes.data() + i0 + stride);
        const __m256d v0 = _mm256_loadu_pd(p0);
        const __m256d v1 = _mm256_loadu_pd(p1);
        const __m256d out0 = _mm256_add_pd(mul_by_scalar(v0, m00r, m00i),
                                           mul_by_scalar(v1, m01r, m01i));
        const __m256d out1 = _mm256_add_pd(mul_by_scalar(v0, m10r, m10i),
                                           mul_by_scalar(v1, m11r, m11i));
        _mm256_storeu_pd(p0, out0);
        _mm256_storeu_pd(p1, out1);
    }
}

void apply_dense(std::span<complex_t> amplitudes,
                 std::span<const complex_t> matrix,
                 std::span<const unsigned> target_bits,
                 std::uint64_t control_mask) {
    const std::size_t k = target_bits.size();
    const std::size_t dim = std::size_t{1} << k;
    const std::size_t groups = amplitudes.size() >> k;

    std::vector<unsigned> sorted(target_bits.begin(), target_bits.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1U) {
                offsets[r] |= std::size_t{1} << target_bits[t];
            }
        }
    }

    std::vector<complex_t> gathered(dim);
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = detail::spread_bits(g, sorted);
        if ((base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            gathered[c] = amplitudes[base + offsets[c]];
        }
        const double *v = as_doubles(gathered.data());
        for (std::size_t r = 0; r < dim; ++r) {
            const double *row = as_doubles(matrix.data() + r * dim);
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t c = 0; c < dim; c += 2) {
                acc = _mm256_add_pd(acc, mul(_mm256_loadu_pd(row + 2 * c),
                                             _mm256_loadu_pd(v + 2 * c)));
            }
            const __m128d sum = _mm_add_pd(_mm256_castpd256_pd128(acc),
                                           _mm256_extractf128_pd(acc, 1));
            alignas(16) double out[2];
            _mm_store_pd(out, sum);
            amplitudes[base + offsets[r]] = complex_t{out[0], out[1]};
        }
    }
}

double norm_squared(std::span<const complex_t> amplitudes) {
    const double *p = as_doubles(amplitudes.data());
    const std::size_t pairs = amplitudes.size() / 2;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < pairs; ++i) {
        const __m256d v = _mm256_loadu_pd(p + 4 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    if (amplitudes.size() % 2 != 0) {
        sum += std::norm(amplitudes.back());
    }
    return sum;
}

complex_t inner_product(std::span<const complex_t> a,
                        std::span<const complex_t> b) {
    const double *pa = as_doubles(a.data());
    const double *pb = as_doubles(b.data());
    const std::size_t pairs = a.size() / 2;
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < pairs; ++i) {
        const __m256d va = _mm256_loadu_pd(pa + 4 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 4 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
    }
    alignas(32) double re[4];
    alignas(32) double im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    // acc_im lanes hold [a.re*b.im, a.im*b.re, ...]
    complex_t sum{(re[0] + re[1]) + (re[2] + re[3]),
                  (im[0] - im[1]) + (im[2] - im[3])};
    if (a.size() % 2 != 0) {
        sum += std::conj(a.back()) * b.back();
    }
    return sum;
}

} // namespace vacuum::simd::avx2
