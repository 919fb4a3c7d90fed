// Copyright 2026 The imkit Authors
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

#ifndef IMKIT_ERRORS_HPP
#define IMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imkit {

/// Coarse classification carried by every library exception. Front ends map
/// these onto exit codes or host-language exception types.
enum class ErrorCategory {
    dimension,   ///< shapes or dimensions do not match
    invariant,   ///< an object violates its type invariant (not Hermitian, not PSD, ...)
    domain,      ///< a scalar argument is outside its admissible range
    convergence, ///< an iterative routine did not reach its tolerance
    parse,       ///< malformed input text
    solver,      ///< the conic solver failed
};

const char *to_string(ErrorCategory c) noexcept;

/// Compact rendering of a double for error messages (six significant digits).
std::string format_number(double x);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string &what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string &what) : Error(ErrorCategory::dimension, what) {}
};

class InvariantError : public Error {
public:
    explicit InvariantError(const std::string &what) : Error(ErrorCategory::invariant, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string &what) : Error(ErrorCategory::domain, what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string &what) : Error(ErrorCategory::convergence, what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::string location)
        : Error(ErrorCategory::parse, location.empty() ? what : location + ": " + what),
          location_(std::move(location)) {}

    /// "line L, column C" for syntax errors or a JSON pointer for field errors.
    const std::string &location() const noexcept { return location_; }

private:
    std::string location_;
};

class SolverError : public Error {
public:
    explicit SolverError(const std::string &what) : Error(ErrorCategory::solver, what) {}
};

} // namespace imkit

#endif // IMKIT_ERRORS_HPP
