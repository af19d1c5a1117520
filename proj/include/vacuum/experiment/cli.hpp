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

#include <iosfwd>

namespace vacuum::experiment {

/// Entry point of the `vacuum-refine` tool:
///
///   vacuum-refine sweep|filter-run|refine|diag --config <path>
///                 [--seed N] [--out prefix]
///
/// Returns 0 on success, 1 on a runtime numerical error and 2 on a
/// configuration or command-line error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace vacuum::experiment
