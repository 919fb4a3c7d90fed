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

// Real (transpose-covariant) quantum operations and closed-form conversion
// rates between states under them.

#ifndef IMKIT_TRANSFORMS_HPP
#define IMKIT_TRANSFORMS_HPP

#include <vector>

#include "imkit/linalg.hpp"

namespace imkit {

/// Residual below which two channel actions count as equal on a matrix unit.
inline constexpr double kCovarianceTolerance = 1e-8;

/// Threshold below which a target's imaginarity counts as zero.
inline constexpr double kZeroImaginarity = 1e-12;

/// Kraus operators {K_m} (each d_out x d_in) of a completely positive,
/// trace non-increasing map.
class KrausSet {
public:
    /// Validates shapes and sum K^dagger K <= I + tol.rec. The map is flagged
    /// trace preserving when that sum equals I within tol.rec.
    explicit KrausSet(std::vector<ComplexMatrix> ops, const Tolerances &tol = {});

    Index d_in() const { return d_in_; }
    Index d_out() const { return d_out_; }
    const std::vector<ComplexMatrix> &ops() const { return ops_; }
    bool trace_preserving() const { return trace_preserving_; }

    /// sum_m K_m^dagger K_m
    ComplexMatrix completeness() const;

    /// sum_m K_m X K_m^dagger for any d_in x d_in matrix X.
    ComplexMatrix apply(const ComplexMatrix &x) const;

    /// All operators have |Im| <= 1e-9 entrywise.
    bool is_real() const;

private:
    std::vector<ComplexMatrix> ops_;
    Index d_in_ = 0;
    Index d_out_ = 0;
    bool trace_preserving_ = false;
};

/// max over matrix units E_ij of |Lambda(E_ij^T) - Lambda(E_ij)^T|.
double covariance_residual(const KrausSet &k);

/// |Lambda(rho^T) - Lambda(rho)^T|, entrywise maximum.
double rho_covariance_residual(const KrausSet &k, const DensityMatrix &rho);

/// True when the map commutes with transposition on every input.
bool is_covariant(const KrausSet &k, double tol = kCovarianceTolerance);

/// Kraus set {(P_j + Q_j)/2, i(P_j - Q_j)/2} of the average (E1 + E2)/2. The
/// shorter list is padded with zero operators.
KrausSet merge_cp_maps(const KrausSet &e1, const KrausSet &e2);

/// Real Kraus set {(L + L*)/2, i(L - L*)/2}: the merge of {L} with {L*},
/// which has the same action as the input when the input is covariant.
/// Throws InvariantError (quoting the residual) otherwise. Operators that
/// vanish identically are dropped.
KrausSet realify_covariant(const KrausSet &k, double tol = kCovarianceTolerance);

/// Same construction for a map that only satisfies Lambda(rho^T) =
/// Lambda(rho)^T on one state. The real output reproduces Lambda(rho).
KrausSet symmetrize_rho_covariant(const KrausSet &k, const DensityMatrix &rho,
                                  double tol = kCovarianceTolerance);

/// Optimal probability of |psi> -> rho under real operations,
/// min(I_g(psi) / I_g(rho), 1). A target with I_g <= kZeroImaginarity gives 1.
double prob_exact(const PureState &psi, const DensityMatrix &rho);

/// min(I_g(sigma) / I_g(rho), 1) for a mixed source. This is only an upper
/// bound on the optimal probability; it is attained for pure sources.
double prob_upper_bound(const DensityMatrix &sigma, const DensityMatrix &rho);

/// Angle bookkeeping for stochastic-approximate conversion (radians):
///   alpha = asin sqrt I_g(source), beta = asin sqrt I_g(target),
///   k = acos sqrt f, m1 = alpha - beta + k.
struct ApproxParams {
    double alpha = 0.0;
    double beta = 0.0;
    double k = 0.0;
    double m1 = 0.0;
};

struct ConversionResult {
    double probability = 0.0;
    double fidelity = 0.0;
    ApproxParams params;
};

/// Smallest I_g among states with F(rho, .) >= f:
/// sin^2(max(asin sqrt I_g(rho) - acos sqrt f, 0)).
double min_geometric_in_ball(const DensityMatrix &rho, double f);

/// Largest I_g among states with F(psi, .) >= f for a pure centre:
/// sin^2(min(asin sqrt I_g(psi) + acos sqrt f, pi/4)).
double max_geometric_in_ball(const PureState &psi, double f);

/// A state in the fidelity ball around rho attaining min_geometric_in_ball.
/// Built member by member from the equal-imaginarity decomposition
/// cos(a)|a_i> + i sin(a)|a_i^perp>, rotating each towards its real part.
DensityMatrix min_imaginarity_state(const DensityMatrix &rho, double f);

/// A pure state in the fidelity ball around psi attaining
/// max_geometric_in_ball. Requires dim >= 2.
PureState max_imaginarity_state(const PureState &psi, double f);

/// Largest success probability of |psi> -> rho with output fidelity >= f.
ConversionResult approx_prob(const PureState &psi, const DensityMatrix &rho, double f);

/// Largest output fidelity of |psi> -> rho with success probability >= p.
ConversionResult approx_fidelity(const PureState &psi, const DensityMatrix &rho, double p);

} // namespace imkit

#endif // IMKIT_TRANSFORMS_HPP
