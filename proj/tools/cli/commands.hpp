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


// The imkit subcommands as library functions, plus the argument-parsing
// entry point shared by the executable and the tests.

#ifndef IMKIT_CLI_COMMANDS_HPP
#define IMKIT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "imkit/conic.hpp"
#include "imkit/errors.hpp"
#include "matrix_file.hpp"
#include "report.hpp"

namespace imkit::cli {

inline constexpr std::size_t kDefaultCurvePoints = 50;

enum ExitCode : int { kOk = 0, kParseFailure = 2, kInvariantFailure = 3, kSolverFailure = 4 };

/// Parse errors map to 2, solver and convergence failures to 4, everything
/// else (invariant, dimension, domain) to 3.
int exit_code(ErrorCategory c) noexcept;

struct Input {
    std::string name;
    std::string text;
    MatrixFile file;
};

Input load_input(const std::string &path);
Input input_from_text(std::string name, std::string text);

struct Options {
    Tolerances tol;
    SolverConfig solver = SolverConfig::from_environment();
    /// Points in trade-off curves; 0 disables them.
    std::size_t curve_points = kDefaultCurvePoints;
};

enum class ConvertMode { exact, prob_at_fidelity, fidelity_at_prob, feasible, sdp_fidelity };
enum class DecomposeKind { conjugate_orthogonal, equal_imaginarity };
enum class KrausAction { check_real, check_covariant, realify, merge };

Report cmd_measure(const Input &state, const Options &opt);

/// `value` is the fidelity f for prob-at-fidelity and the probability p for
/// fidelity-at-prob and sdp-fidelity; other modes ignore it.
Report cmd_convert(const Input &source, const Input &target, ConvertMode mode, double value, const Options &opt);

Report cmd_decompose(const Input &state, DecomposeKind kind, const Options &opt);

/// merge takes two Kraus files, the other actions one.
Report cmd_kraus(const std::vector<Input> &kraus, KrausAction action, const Options &opt);

/// Full command line. Writes the report to `out` (or to --output) and
/// diagnostics to `err`; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace imkit::cli

#endif // IMKIT_CLI_COMMANDS_HPP
