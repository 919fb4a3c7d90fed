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

// Pure-state decompositions of mixed states that are extremal for the
// geometric imaginarity.

#ifndef IMKIT_DECOMPOSITIONS_HPP
#define IMKIT_DECOMPOSITIONS_HPP

#include <vector>

#include "imkit/linalg.hpp"

namespace imkit {

struct EnsembleMember {
    double weight;
    PureState state;
};

/// Weighted pure states {p_j, |psi_j>}.
struct Ensemble {
    std::vector<EnsembleMember> members;

    std::size_t size() const { return members.size(); }
    double total_weight() const;

    /// sum_j p_j |psi_j><psi_j|
    ComplexMatrix mixture() const;

    /// Columns sqrt(p_j) |psi_j>.
    ComplexMatrix subnormalized() const;

    /// sum_j p_j I_g(psi_j)
    double average_imaginarity() const;
};

/// Unitary U relating two ensembles of the same state:
///   sqrt(q_i) |phi_i> = sum_j conj(U_ij) sqrt(p_j) |psi_j>.
struct EnsembleRotation {
    ComplexMatrix u;
};

/// Applies an ensemble rotation. The output has as many members as U has
/// rows; members whose weight falls below `prune_weight` are dropped.
Ensemble rotate(const Ensemble &e, const EnsembleRotation &r, double prune_weight = 1e-12);

/// Ensemble whose conjugate Gram matrix sqrt(l_i l_j) <mu_i|mu_j*> is diagonal.
struct ConjugateOrthogonalEnsemble {
    Ensemble ensemble;
    RealVector diag; ///< D_j; sums to sqrt F(rho, rho^T)

    /// Matrix with entries sqrt(l_i l_j) <mu_i|mu_j*>.
    ComplexMatrix conjugate_gram() const;
};

struct DecompositionOptions {
    double prune_weight = 1e-12;  ///< members lighter than this are dropped
    double bisection_tol = 1e-12; ///< width of the final bracket on the mixing angle
    int max_iter = 200;           ///< bisection steps before giving up
    double equal_tol = 1e-11;     ///< a member this close to the target is considered done
};

/// Eigen-ensemble of rho rotated by the conjugate transpose of the Takagi
/// unitary of A_ij = sqrt(p_i p_j) <psi_i|psi_j*>. Its average imaginarity
/// attains I_g(rho).
ConjugateOrthogonalEnsemble conjugate_orthogonal_decomposition(const DensityMatrix &rho,
                                                               const DecompositionOptions &opt = {});

/// Decomposition in which every member has imaginarity I_g(rho).
///
/// Starting from the conjugate-orthogonal ensemble, repeatedly takes the
/// members with the largest and smallest imaginarity, mixes them by a real
/// rotation, and bisects the angle until the first rotated member hits the
/// target. The rotation conserves the average conjugate product, so the last
/// remaining member lands on the target as well.
///
/// Throws ConvergenceError if a bisection needs more than opt.max_iter steps.
Ensemble equal_imaginarity_decomposition(const DensityMatrix &rho, const DecompositionOptions &opt = {});

/// sum_i p_i <psi_i|psi_i*>. Real and equal to 1 - 2 I_g(rho) for the
/// ensembles built here; a general ensemble can give a complex value.
Complex average_conjugate_product(const Ensemble &e);

} // namespace imkit

#endif // IMKIT_DECOMPOSITIONS_HPP
