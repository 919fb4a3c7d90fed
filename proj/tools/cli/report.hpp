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


// Command reports and their text, CSV and structured (JSON) renderings.

#ifndef IMKIT_CLI_REPORT_HPP
#define IMKIT_CLI_REPORT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "imkit/conic.hpp"
#include "imkit/linalg.hpp"
#include "matrix_file.hpp"

namespace imkit::cli {

using Value = std::variant<double, bool, std::string>;

struct NamedValue {
    std::string name;
    Value value;
    bool operator==(const NamedValue &) const = default;
};

struct NamedMatrix {
    std::string name;
    ComplexMatrix matrix;
    bool operator==(const NamedMatrix &other) const;
};

/// A table of real columns; trade-off curves and ensemble listings.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    bool operator==(const Table &) const = default;
};

struct Provenance {
    std::string version;
    Tolerances tolerances;
    double solver_gap = 0.0;
    int solver_max_iter = 0;
    double alpha_tol = 0.0;
    double covariance_tol = 0.0;
    bool operator==(const Provenance &other) const;
};

struct Report {
    std::string command;
    std::string inputs_digest;
    std::vector<NamedValue> values;
    std::vector<NamedMatrix> matrices;
    std::vector<Table> tables;
    /// A file produced by the command (a transformed Kraus set).
    std::optional<MatrixFile> artifact;
    Provenance provenance;

    void add(std::string name, Value v) { values.push_back({std::move(name), std::move(v)}); }
    const Value *find(const std::string &name) const;
    const Table *find_table(const std::string &name) const;

    /// Throws InvariantError naming the first non-finite number.
    void require_finite() const;

    bool operator==(const Report &) const = default;
};

enum class Format { text, csv, structured };

std::string render(const Report &r, Format f);

/// Parses the structured rendering back. Throws ParseError.
Report parse_structured(const std::string &text);

/// FNV-1a 64-bit digest of the inputs, each followed by a zero byte,
/// written as "fnv1a64:<16 hex digits>".
std::string digest(const std::vector<std::string> &inputs);

} // namespace imkit::cli

#endif // IMKIT_CLI_REPORT_HPP
