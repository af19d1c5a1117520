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

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vacuum::experiment {

/// Comma-separated output with a header row, LF line endings and numbers
/// printed with 9 significant digits ('.' decimal, locale-independent).
class CsvWriter {
  public:
    using Cell = std::variant<double, long long, std::string>;

    CsvWriter(const std::filesystem::path &path, std::vector<std::string> header);

    void row(const std::vector<Cell> &cells);
    [[nodiscard]] std::size_t columns() const noexcept { return columns_; }

  private:
    std::ofstream out_;
    std::size_t columns_;
};

/// `value` with 9 significant digits.
[[nodiscard]] std::string format_number(double value);

} // namespace vacuum::experiment
