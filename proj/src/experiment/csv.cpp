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

#include "vacuum/experiment/csv.hpp"

#include "vacuum/error.hpp"

#include <cmath>
#include <cstdio>

namespace vacuum::experiment {

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.9g", value == 0.0 ? 0.0 : value);
    return buffer;
}

CsvWriter::CsvWriter(const std::filesystem::path &path, std::vector<std::string> header)
    : columns_(header.size()) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) {
        throw Error("cannot write '" + path.string() + "'");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out_ << (i == 0 ? "" : ",") << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell> &cells) {
    if (cells.size() != columns_) {
        throw DomainError("CSV row has " + std::to_string(cells.size()) +
                          " cells, expected " + std::to_string(columns_));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out_ << ',';
        }
        std::visit(
            [this](const auto &v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    out_ << format_number(v);
                } else if constexpr (std::is_same_v<T, long long>) {
                    out_ << v;
                } else {
                    out_ << v;
                }
            },
            cells[i]);
    }
    out_ << '\n';
    if (!out_) {
        throw Error("CSV write failed");
    }
}

} // namespace vacuum::experiment
