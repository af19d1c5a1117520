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
#include <stdexcept>
#include <string>

namespace vacuum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad index, size mismatch, J <= 0).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A supplied object violates a structural invariant (e.g. non-unitary gate).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Post-selection on an outcome whose probability is numerically zero.
class ImpossibleOutcomeError : public Error {
  public:
    using Error::Error;
};

/// Numerical inconsistency or a failed convergence check.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Dense path requested above the configured qubit cap.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Malformed configuration or input file. `line()` is 1-based, 0 if unknown.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string &message, std::size_t line = 0)
        : Error(line == 0 ? message
                          : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace vacuum
