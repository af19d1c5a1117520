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

#include "vacuum/rng.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace vacuum {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(~stream));
}

RandomEngine make_engine(std::uint64_t seed) {
    return RandomEngine(splitmix64(seed));
}

std::size_t worker_count() {
    const char *value = std::getenv("VACUUM_REFINE_THREADS");
    if (value == nullptr) {
        return 1;
    }
    std::size_t workers = 0;
    const auto [ptr, ec] = std::from_chars(value, value + std::strlen(value), workers);
    if (ec != std::errc{} || workers == 0) {
        return 1;
    }
    return workers;
}

} // namespace vacuum
