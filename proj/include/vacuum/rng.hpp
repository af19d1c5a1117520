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

#include <cstddef>
#include <cstdint>
#include <random>

namespace vacuum {

/// The generator behind every sampled quantity. Seeds are always recorded
/// alongside the outputs they produced.
using RandomEngine = std::mt19937_64;

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent seed for sub-stream `stream` of `seed` (shot chunks,
/// trajectory records, ...). Pure function of its arguments.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed,
                                        std::uint64_t stream) noexcept;

[[nodiscard]] RandomEngine make_engine(std::uint64_t seed);

/// Worker cap from VACUUM_REFINE_THREADS (default 1, minimum 1).
[[nodiscard]] std::size_t worker_count();

} // namespace vacuum
