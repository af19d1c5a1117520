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

#include "vacuum/simd/kernels.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

namespace {

using vacuum::simd::Backend;
using vacuum::simd::complex_t;

std::vector<complex_t> random_amplitudes(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<complex_t> v(n);
    for (auto &a : v) {
        a = {normal(rng), normal(rng)};
    }
    return v;
}

double max_diff(const std::vector<complex_t> &a, const std::vector<complex_t> &b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

class Avx2Equivalence : public ::testing::Test {
  protected:
    void SetUp() override {
        if (!vacuum::simd::backend_available(Backend::avx2)) {
            GTEST_SKIP() << "AVX2 not available on this CPU";
        }
    }
    std::mt19937_64 rng{20260101};
};

TEST_F(Avx2Equivalence, SingleQubitEveryBitAndControl) {
    const auto &s = vacuum::simd::kernels(Backend::scalar);
    const auto &v = vacuum::simd::kernels(Backend::avx2);
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned bit = 0; bit < n; ++bit) {
            for (std::uint64_t control = 0; control < (1ULL << n); ++control) {
                if (control & (1ULL << bit)) {
                    continue;
                }
                const auto m = random_amplitudes(4, rng);
                complex_t matrix[4] = {m[0], m[1], m[2], m[3]};
                auto a = random_amplitudes(1ULL << n, rng);
                auto b = a;
                s.apply_single(a, matrix, bit, control);
                v.apply_single(b, matrix, bit, control);
                ASSERT_LE(max_diff(a, b), 1e-13) << "n=" << n << " bit=" << bit;
            }
        }
    }
}

TEST_F(Avx2Equivalence, DenseMultiTarget) {
    const auto &s = vacuum::simd::kernels(Backend::scalar);
    const auto &v = vacuum::simd::kernels(Backend::avx2);
    const unsigned n = 6;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<unsigned> bits(n);
        for (unsigned i = 0; i < n; ++i) {
            bits[i] = i;
        }
        std::shuffle(bits.begin(), bits.end(), rng);
        const unsigned k = 1 + trial % 3;
        std::vector<unsigned> targets(bits.begin(), bits.begin() + k);
        std::uint64_t control = 0;
        if (trial % 2 == 1) {
            control = 1ULL << bits[k];
        }
        const auto matrix = random_amplitudes(1ULL << (2 * k), rng);
        auto a = random_amplitudes(1ULL << n, rng);
        auto b = a;
        s.apply_dense(a, matrix, targets, control);
        v.apply_dense(b, matrix, targets, control);
        ASSERT_LE(max_diff(a, b), 1e-12) << "trial " << trial;
    }
}

TEST_F(Avx2Equivalence, Reductions) {
    const auto &s = vacuum::simd::kernels(Backend::scalar);
    const auto &v = vacuum::simd::kernels(Backend::avx2);
    for (std::size_t n : {1, 2, 3, 5, 8, 17, 64, 1000}) {
        const auto a = random_amplitudes(n, rng);
        const auto b = random_amplitudes(n, rng);
        EXPECT_NEAR(s.norm_squared(a), v.norm_squared(a), 1e-11 * static_cast<double>(n));
        EXPECT_LE(std::abs(s.inner_product(a, b) - v.inner_product(a, b)),
                  1e-11 * static_cast<double>(n));
    }
}

TEST(Kernels, ScalarAlwaysAvailable) {
    EXPECT_TRUE(vacuum::simd::backend_available(Backend::scalar));
    EXPECT_EQ(vacuum::simd::backend_name(Backend::scalar), "scalar");
}

TEST(Kernels, InnerProductConjugatesFirstArgument) {
    const std::vector<complex_t> a = {{0, 1}};
    const std::vector<complex_t> b = {{1, 0}};
    const auto r = vacuum::simd::kernels(Backend::scalar).inner_product(a, b);
    EXPECT_DOUBLE_EQ(r.real(), 0.0);
    EXPECT_DOUBLE_EQ(r.imag(), -1.0);
}

} // namespace
