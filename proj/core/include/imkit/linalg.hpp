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

// Dense complex linear algebra for finite-dimensional quantum states.
//
// All transposes and conjugations act entrywise in the fixed computational
// basis. Imaginarity is a basis-dependent notion, so no basis argument is
// exposed anywhere: callers rotate their inputs themselves.

#ifndef IMKIT_LINALG_HPP
#define IMKIT_LINALG_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "imkit/errors.hpp"

namespace imkit {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerances used to validate states and factorizations.
struct Tolerances {
    double herm = 1e-9;  ///< max |M - M^dagger| entry; also unitarity/symmetry checks
    double trace = 1e-9; ///< |Tr rho - 1|
    double norm = 1e-9;  ///< | ||psi|| - 1 |
    double psd = 1e-8;   ///< most negative admissible eigenvalue (as -psd)
    double rec = 1e-8;   ///< reconstruction residuals (max entry)

    /// Same value for every field.
    static Tolerances uniform(double tol) { return {tol, tol, tol, tol, tol}; }
};

class PureState;

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// The constructor validates the invariants against the supplied tolerances and
/// stores the Hermitian part of its argument, so small asymmetries in the input
/// do not propagate.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix &m, const Tolerances &tol = {});

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(Index dim);

    Index dim() const { return mat_.rows(); }
    const ComplexMatrix &matrix() const { return mat_; }
    const Tolerances &tolerances() const { return tol_; }

    /// rho^T. Equal to the entrywise conjugate since rho is Hermitian.
    DensityMatrix transpose() const;

    /// Largest |Im rho_ij|.
    double max_imag() const;

private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix m, Tolerances tol) : mat_(std::move(m)), tol_(tol) {}

    ComplexMatrix mat_;
    Tolerances tol_;
};

/// Unit vector in C^d.
class PureState {
public:
    explicit PureState(ComplexVector amplitudes, const Tolerances &tol = {});

    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(const ComplexVector &v);

    Index dim() const { return amps_.size(); }
    const ComplexVector &amplitudes() const { return amps_; }

    /// |psi*>, the entrywise conjugate.
    PureState conjugate() const;

    /// |psi><psi| as a plain matrix.
    ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

    /// sum_k psi_k^2, i.e. the complex conjugate of <psi|psi*>.
    Complex conjugate_overlap() const { return (amps_.array() * amps_.array()).sum(); }

private:
    ComplexVector amps_;
};

enum class Side { A, B };

/// Density matrix on C^{d_A} (x) C^{d_B}, with A the slow index.
class BipartiteState {
public:
    BipartiteState(const ComplexMatrix &m, Index dim_a, Index dim_b, const Tolerances &tol = {});
    BipartiteState(DensityMatrix rho, Index dim_a, Index dim_b);

    Index dim_a() const { return dim_a_; }
    Index dim_b() const { return dim_b_; }
    const DensityMatrix &state() const { return rho_; }
    const ComplexMatrix &matrix() const { return rho_.matrix(); }

private:
    DensityMatrix rho_;
    Index dim_a_;
    Index dim_b_;
};

/// Hermitian operator on a bipartite space that need not be positive, e.g. a
/// partial transpose.
struct BipartiteOperator {
    Index dim_a = 0;
    Index dim_b = 0;
    ComplexMatrix mat;
};

/// Kronecker product, left factor as the slow index.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Entrywise transpose on one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix &m, Index dim_a, Index dim_b, Side side);
BipartiteOperator partial_transpose(const BipartiteState &s, Side side);

/// Trace over one tensor factor; `traced` is the factor that is removed.
ComplexMatrix partial_trace(const ComplexMatrix &m, Index dim_a, Index dim_b, Side traced);

bool is_hermitian(const ComplexMatrix &m, double tol);
double max_imag(const ComplexMatrix &m);

/// Largest entry of |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol.psd, 0) are clipped to zero; anything more negative is an error.
ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol = {});

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);

/// sqrt F(rho, sigma) = || sqrt(rho) sqrt(sigma) ||_1, clamped to [0, 1].
double root_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// F(rho, sigma) = root_fidelity^2.
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// arccos(root_fidelity), in [0, pi/2].
double bures_angle(const DensityMatrix &rho, const DensityMatrix &sigma);

/// s = q * diag(sigma) * q^T with q unitary and sigma descending.
struct TakagiFactorization {
    ComplexMatrix q;
    RealVector sigma;

    ComplexMatrix reconstruct() const;
};

/// Takagi factorization of a complex symmetric matrix.
///
/// Built from the real symmetric eigenproblem
///   [[Re S,  Im S], [Im S, -Re S]] [x; y] = s [x; y],
/// whose nonnegative spectrum is the singular values of S and whose
/// eigenvectors give Takagi vectors q = x + i y (S conj(q) = s q). Degenerate
/// singular values need no special handling: any orthonormal basis of the
/// eigenspace yields valid columns. Columns for zero singular values are an
/// orthonormal completion. Each column's sign is fixed so that its
/// largest-magnitude entry has positive real part.
TakagiFactorization takagi(const ComplexMatrix &s, const Tolerances &tol = {});

} // namespace imkit

#endif // IMKIT_LINALG_HPP
