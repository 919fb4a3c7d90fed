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

// Real block-diagonal semidefinite programs and a primal-dual interior point
// solver for them.
//
// Standard form, with X = diag(X_1, ..., X_K) and every block symmetric:
//
//   primal:  minimize   sum_b <C_b, X_b>
//            subject to sum_b <A_ib, X_b> = b_i   (i = 1..m),   X_b >= 0
//
//   dual:    maximize   b^T y
//            subject to S_b = C_b - sum_i y_i A_ib >= 0
//
// A block of size 1 is a nonnegative scalar.

#ifndef IMKIT_CONIC_HPP
#define IMKIT_CONIC_HPP

#include <string>
#include <vector>

#include "imkit/linalg.hpp"

namespace imkit {

struct SdpProblem {
    std::vector<Index> block_sizes;

    /// cost[b], one symmetric matrix per block.
    std::vector<RealMatrix> cost;

    /// constraints[i][b]; an empty (0x0) matrix stands for a zero block.
    std::vector<std::vector<RealMatrix>> constraints;

    RealVector rhs;

    /// Appends a constraint with all-zero blocks and returns its index.
    std::size_t add_constraint(double rhs_value);

    /// Sets an empty problem with the given blocks and zero cost.
    explicit SdpProblem(std::vector<Index> sizes = {});

    /// Throws DimensionError on inconsistent shapes.
    void validate() const;
};

enum class SolverStatus { optimal, near_optimal, infeasible_numeric, failed };

const char *to_string(SolverStatus s) noexcept;

struct SolverConfig {
    double gap_tol = 1e-8;   ///< relative duality gap and relative infeasibilities
    int max_iter = 200;
    double step_fraction = 0.95; ///< fraction of the distance to the cone boundary
    double near_factor = 1e3;    ///< "near optimal" means within near_factor * gap_tol

    /// Defaults, with gap_tol overridden by $IMKIT_SOLVER_GAP when it holds a
    /// positive number.
    static SolverConfig from_environment();
};

struct SdpResult {
    SolverStatus status = SolverStatus::failed;
    std::vector<RealMatrix> x;
    RealVector y;
    std::vector<RealMatrix> s;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double relative_gap = 0.0;
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    int iterations = 0;
    std::string message;
};

/// Anything that can solve an SdpProblem.
class ConicSolver {
public:
    virtual ~ConicSolver() = default;
    virtual SdpResult solve(const SdpProblem &problem) const = 0;
};

/// Infeasible-start primal-dual path following with the HKM search direction
/// and Mehrotra predictor-corrector steps. Dense; sized for problems with a
/// few hundred constraints and blocks up to ~100.
class InteriorPointSolver final : public ConicSolver {
public:
    explicit InteriorPointSolver(SolverConfig config = {}) : config_(config) {}

    SdpResult solve(const SdpProblem &problem) const override;

    const SolverConfig &config() const { return config_; }

private:
    SolverConfig config_;
};

} // namespace imkit

#endif // IMKIT_CONIC_HPP
