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

#include "imkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace imkit {

namespace {

std::string shape_str(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError(std::string(what) + " must be a nonempty square matrix, got " +
                             shape_str(m));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const ComplexMatrix &m, const Tolerances &tol) : tol_(tol) {
    require_square(m, "density matrix");
    if (!m.allFinite()) {
        throw InvariantError("density matrix has non-finite entries");
    }
    const double herm_dev = max_abs_diff(m, m.adjoint());
    if (herm_dev > tol.herm) {
        throw InvariantError("density matrix is not Hermitian (max |M - M^dagger| = " +
                             format_number(herm_dev) + ")");
    }
    mat_ = (m + m.adjoint()) / 2.0;
    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw InvariantError("density matrix trace is " + format_number(tr) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -tol.psd) {
        throw InvariantError("density matrix is not positive semidefinite (min eigenvalue " +
                             format_number(lmin) + ")");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(Trusted{}, psi.projector(), Tolerances{});
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
    if (dim <= 0) {
        throw DimensionError("dimension must be positive");
    }
    return DensityMatrix(Trusted{}, ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim),
                         Tolerances{});
}

DensityMatrix DensityMatrix::transpose() const {
    return DensityMatrix(Trusted{}, mat_.transpose(), tol_);
}

double DensityMatrix::max_imag() const { return imkit::max_imag(mat_); }

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector amplitudes, const Tolerances &tol) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) {
        throw DimensionError("pure state must have at least one amplitude");
    }
    if (!amps_.allFinite()) {
        throw InvariantError("pure state has non-finite amplitudes");
    }
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > tol.norm) {
        throw InvariantError("pure state norm is " + format_number(n) + ", expected 1");
    }
}

PureState PureState::normalized(const ComplexVector &v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvariantError("cannot normalize a zero or non-finite vector");
    }
    return PureState(v / n);
}

PureState PureState::conjugate() const { return PureState(amps_.conjugate()); }

// ---------------------------------------------------------------------------
// BipartiteState

BipartiteState::BipartiteState(const ComplexMatrix &m, Index dim_a, Index dim_b, const Tolerances &tol)
    : BipartiteState(DensityMatrix(m, tol), dim_a, dim_b) {}

BipartiteState::BipartiteState(DensityMatrix rho, Index dim_a, Index dim_b)
    : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != rho_.dim()) {
        throw DimensionError("bipartite dims " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                             " do not match state dimension " + std::to_string(rho_.dim()));
    }
}

// ---------------------------------------------------------------------------
// Kernels

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, Index dim_a, Index dim_b, Side side) {
    if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
        throw DimensionError("partial_transpose: matrix " + shape_str(m) + " does not match dims " +
                             std::to_string(dim_a) + "x" + std::to_string(dim_b));
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (Index a = 0; a < dim_a; ++a) {
        for (Index b = 0; b < dim_b; ++b) {
            for (Index ap = 0; ap < dim_a; ++ap) {
                for (Index bp = 0; bp < dim_b; ++bp) {
                    const Index row = a * dim_b + b;
                    const Index col = ap * dim_b + bp;
                    out(row, col) = side == Side::B ? m(a * dim_b + bp, ap * dim_b + b)
                                                    : m(ap * dim_b + b, a * dim_b + bp);
                }
            }
        }
    }
    return out;
}

BipartiteOperator partial_transpose(const BipartiteState &s, Side side) {
    return {s.dim_a(), s.dim_b(), partial_transpose(s.matrix(), s.dim_a(), s.dim_b(), side)};
}

ComplexMatrix partial_trace(const ComplexMatrix &m, Index dim_a, Index dim_b, Side traced) {
    if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
        throw DimensionError("partial_trace: matrix " + shape_str(m) + " does not match dims " +
                             std::to_string(dim_a) + "x" + std::to_string(dim_b));
    }
    if (traced == Side::B) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (Index a = 0; a < dim_a; ++a)
            for (Index ap = 0; ap < dim_a; ++ap)
                for (Index b = 0; b < dim_b; ++b) out(a, ap) += m(a * dim_b + b, ap * dim_b + b);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (Index a = 0; a < dim_a; ++a) out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
    return out;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

double max_imag(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch: " + shape_str(a) + " vs " + shape_str(b));
    }
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol) {
    require_square(m, "psd_sqrt argument");
    if (!is_hermitian(m, tol.herm)) {
        throw InvariantError("psd_sqrt: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0);
    RealVector evals = es.eigenvalues();
    if (evals.minCoeff() < -tol.psd) {
        throw InvariantError("psd_sqrt: eigenvalue " + format_number(evals.minCoeff()) +
                             " below -tol_psd");
    }
    // Eigenvalues at roundoff level are treated as exact zeros; their square
    // roots would otherwise inject errors of order sqrt(eps).
    const double cutoff = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(evals.size()) *
                          std::max(evals.maxCoeff(), 0.0);
    for (Index k = 0; k < evals.size(); ++k) evals(k) = evals(k) <= cutoff ? 0.0 : std::sqrt(evals(k));
    return es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_norm(const ComplexMatrix &m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().sum();
}

double root_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw DimensionError("root_fidelity: dimensions " + std::to_string(rho.dim()) + " and " +
                             std::to_string(sigma.dim()) + " differ");
    }
    const ComplexMatrix prod = psd_sqrt(rho.matrix(), rho.tolerances()) *
                               psd_sqrt(sigma.matrix(), sigma.tolerances());
    return std::clamp(trace_norm(prod), 0.0, 1.0);
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    const double r = root_fidelity(rho, sigma);
    return r * r;
}

double bures_angle(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return std::acos(root_fidelity(rho, sigma));
}

// ---------------------------------------------------------------------------
// Takagi

ComplexMatrix TakagiFactorization::reconstruct() const {
    return q * sigma.cast<Complex>().asDiagonal() * q.transpose();
}

namespace {

// Orthogonalizes v against the first `count` columns of q (twice, for
// stability) and returns the residual norm.
double orthogonalize(const ComplexMatrix &q, Index count, ComplexVector &v) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Index j = 0; j < count; ++j) {
            v -= q.col(j).dot(v) * q.col(j);
        }
    }
    return v.norm();
}

void fix_sign(ComplexVector &v) {
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex lead = v(imax);
    if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0)) v = -v;
}

} // namespace

TakagiFactorization takagi(const ComplexMatrix &s, const Tolerances &tol) {
    require_square(s, "takagi argument");
    if (max_abs_diff(s, s.transpose()) > tol.herm) {
        throw InvariantError("takagi: matrix is not complex symmetric");
    }
    const Index n = s.rows();
    const ComplexMatrix sym = (s + s.transpose()) / 2.0;
    const RealMatrix re = sym.real();
    const RealMatrix im = sym.imag();

    RealMatrix big(2 * n, 2 * n);
    big << re, im, im, -re;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(big);
    const RealVector &evals = es.eigenvalues(); // ascending
    const RealMatrix &evecs = es.eigenvectors();

    const double scale = std::max(1.0, std::abs(evals(2 * n - 1)));
    const double cutoff = 64.0 * std::numeric_limits<double>::epsilon() * scale * static_cast<double>(n);

    TakagiFactorization out;
    out.q = ComplexMatrix::Zero(n, n);
    out.sigma = RealVector::Zero(n);

    Index filled = 0;
    for (Index k = 2 * n - 1; k >= n; --k) {
        if (evals(k) <= cutoff) break;
        ComplexVector v(n);
        for (Index i = 0; i < n; ++i) v(i) = Complex(evecs(i, k), evecs(n + i, k));
        const double r = orthogonalize(out.q, filled, v);
        if (r < 0.5) break; // lost to roundoff; remaining columns are completed below
        out.q.col(filled) = v / r;
        out.sigma(filled) = evals(k);
        ++filled;
    }

    // Orthonormal completion spanning the null space of s.
    for (Index e = 0; filled < n && e < n; ++e) {
        ComplexVector v = ComplexVector::Unit(n, e);
        const double r = orthogonalize(out.q, filled, v);
        if (r > 0.5) {
            out.q.col(filled) = v / r;
            ++filled;
        }
    }
    // A random start always succeeds where the unit vectors were unlucky.
    while (filled < n) {
        ComplexVector v = ComplexVector::Random(n);
        const double r = orthogonalize(out.q, filled, v);
        if (r > 1e-3) {
            out.q.col(filled) = v / r;
            ++filled;
        }
    }

    for (Index j = 0; j < n; ++j) {
        ComplexVector col = out.q.col(j);
        fix_sign(col);
        out.q.col(j) = col;
    }
    return out;
}

} // namespace imkit
