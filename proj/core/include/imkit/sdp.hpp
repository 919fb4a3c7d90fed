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

// Choi matrices and the two semidefinite programs about real operations:
// deciding whether rho -> sigma is possible under a real CPTP map, and the
// optimal fidelity of reaching a pure target with a given success probability.

#ifndef IMKIT_SDP_HPP
#define IMKIT_SDP_HPP

#include "imkit/conic.hpp"
#include "imkit/linalg.hpp"
#include "imkit/transforms.hpp"

namespace imkit {

/// sum_ij |i><j| (x) Lambda(|i><j|), input factor as the slow index.
struct ChoiMatrix {
    Index d_in = 0;
    Index d_out = 0;
    ComplexMatrix mat;

    /// Real entries and symmetric, i.e. the map has a real Kraus form.
    bool is_real(double tol = 1e-9) const;

    /// Tr_out of the Choi matrix, which is <= I for trace non-increasing maps.
    ComplexMatrix output_trace() const;
};

ChoiMatrix choi_from_kraus(const KrausSet &k);

/// Lambda(rho) = Tr_in[ Sigma (rho^T (x) I) ].
ComplexMatrix apply_choi(const ChoiMatrix &c, const ComplexMatrix &rho);
ComplexMatrix apply_choi(const ChoiMatrix &c, const DensityMatrix &rho);

/// [[Re H, -Im H], [Im H, Re H]]. Real symmetric for Hermitian H, with the
/// spectrum of H doubled in multiplicity.
RealMatrix real_embed(const ComplexMatrix &h);

/// Outcome of the transformation test. alpha = min Tr Z subject to
///   I (x) Z >= X1 (x) rho + X2 (x) rho^T,  Tr(sigma^T X1 + sigma X2) = 1,
///   X1, X2 >= 0,
/// and rho -> sigma is possible with a real CPTP map iff alpha = 1.
struct FeasibilityReport {
    double alpha = 0.0;
    bool feasible = false;
    ComplexMatrix z_cert;
    ComplexMatrix x1_cert;
    ComplexMatrix x2_cert;
    SolverStatus solver_status = SolverStatus::failed;
    int iterations = 0;
};

/// Slack allowed on |alpha - 1| when declaring a transformation feasible.
inline constexpr double kAlphaTolerance = 1e-6;

/// Solves the transformation program. alpha is reported as solved, never
/// rounded. Hermitian variables go through the real embedding.
FeasibilityReport feasibility_alpha(const DensityMatrix &rho, const DensityMatrix &sigma,
                                    const ConicSolver &solver, double tol_alpha = kAlphaTolerance);
FeasibilityReport feasibility_alpha(const DensityMatrix &rho, const DensityMatrix &sigma,
                                    const SolverConfig &config = {}, double tol_alpha = kAlphaTolerance);

struct SdpSolution {
    double objective = 0.0;
    ChoiMatrix choi;
    SolverStatus solver_status = SolverStatus::failed;
    int iterations = 0;
};

/// Largest fidelity <psi| Lambda(rho) |psi> / p over real CP trace
/// non-increasing maps with Tr Lambda(rho) = p. The Choi matrix is a native
/// real symmetric variable, so Hermitian data enters through its real part.
/// Throws DomainError unless 0 < p <= 1.
SdpSolution optimal_fidelity_pure_target(const DensityMatrix &rho, const PureState &psi, double p,
                                         const ConicSolver &solver);
SdpSolution optimal_fidelity_pure_target(const DensityMatrix &rho, const PureState &psi, double p,
                                         const SolverConfig &config = {});

} // namespace imkit

#endif // IMKIT_SDP_HPP
