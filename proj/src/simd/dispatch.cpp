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

#include "vacuum/error.hpp"

#include <cstdlib>
#include <string>

namespace vacuum::simd {

namespace {

constexpr KernelTable scalar_table{Backend::scalar, &scalar::apply_dense,
                                   &scalar::apply_single,
                                   &scalar::norm_squared,
                                   &scalar::inner_product};

#if defined(VACUUM_HAVE_AVX2_TU)
constexpr KernelTable avx2_table{Backend::avx2, &avx2::apply_dense,
                                 &avx2::apply_single, &avx2::norm_squared,
                                 &avx2::inner_product};
#endif

bool cpu_has_avx2() noexcept {
#if defined(VACUUM_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend select_backend() {
    const char *forced = std::getenv("VACUUM_REFINE_SIMD");
    if (forced != nullptr) {
        const std::string choice{forced};
        if (choice == "scalar") {
            return Backend::scalar;
        }
        if (choice == "avx2" && backend_available(Backend::avx2)) {
            return Backend::avx2;
        }
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

} // namespace

bool backend_available(Backend backend) noexcept {
    switch (backend) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
        return cpu_has_avx2();
    }
    return false;
}

std::string_view backend_name(Backend backend) noexcept {
    switch (backend) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    }
    return "unknown";
}

const KernelTable &kernels(Backend backend) {
    if (!backend_available(backend)) {
        throw DomainError("SIMD backend '" + std::string(backend_name(backend)) +
                          "' is not available on this machine");
    }
#if defined(VACUUM_HAVE_AVX2_TU)
    if (backend == Backend::avx2) {
        return avx2_table;
    }
#endif
    return scalar_table;
}

const KernelTable &kernels() {
    static const KernelTable &active = kernels(select_backend());
    return active;
}

} // namespace vacuum::simd
