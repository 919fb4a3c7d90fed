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

#include "imkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "imkit/decompositions.hpp"
#include "imkit/measures.hpp"

namespace imkit {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

double asin_sqrt(double x) { return std::asin(std::sqrt(std::clamp(x, 0.0, 1.0))); }
double acos_sqrt(double x) { return std::acos(std::sqrt(std::clamp(x, 0.0, 1.0))); }

void require_unit_interval(double f, const char *name) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + format_number(f));
    }
}

// Splits psi (up to a global phase) as cos(a)|x> + i sin(a)|y> with x, y real
// orthonormal, by rotating sum_k psi_k^2 onto the positive real axis. Returns
// the unnormalized real and imaginary parts.
std::pair<RealVector, RealVector> real_imag_split(const ComplexVector &psi) {
    const Complex c = (psi.array() * psi.array()).sum();
    const Complex phase = std::polar(1.0, -std::arg(c) / 2.0);
    const ComplexVector rotated = phase * psi;
    return {rotated.real(), rotated.imag()};
}

// Unit real vector orthogonal to a real unit vector a (dim >= 2).
RealVector real_orthogonal(const RealVector &a) {
    Index best = 0;
    a.cwiseAbs().minCoeff(&best);
    RealVector v = RealVector::Unit(a.size(), best);
    v -= a.dot(v) * a;
    return v.normalized();
}

KrausSet realified(const KrausSet &k) {
    std::vector<ComplexMatrix> out;
    for (const ComplexMatrix &l : k.ops()) {
        const ComplexMatrix sym = 0.5 * (l + l.conjugate());
        const ComplexMatrix anti = Complex(0.0, 0.5) * (l - l.conjugate());
        // Both are real by construction; drop the roundoff in the imaginary part.
        if (sym.cwiseAbs().maxCoeff() > 0.0) out.emplace_back(sym.real().cast<Complex>());
        if (anti.cwiseAbs().maxCoeff() > 0.0) out.emplace_back(anti.real().cast<Complex>());
    }
    if (out.empty()) out.emplace_back(ComplexMatrix::Zero(k.d_out(), k.d_in()));
    return KrausSet(std::move(out));
}

} // namespace

// ---------------------------------------------------------------------------
// KrausSet

KrausSet::KrausSet(std::vector<ComplexMatrix> ops, const Tolerances &tol) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DimensionError("Kraus set must contain at least one operator");
    }
    d_out_ = ops_.front().rows();
    d_in_ = ops_.front().cols();
    if (d_in_ == 0 || d_out_ == 0) {
        throw DimensionError("Kraus operators must be nonempty");
    }
    for (const auto &k : ops_) {
        if (k.rows() != d_out_ || k.cols() != d_in_) {
            throw DimensionError("Kraus operators have inconsistent shapes");
        }
        if (!k.allFinite()) {
            throw InvariantError("Kraus operator has non-finite entries");
        }
    }
    const ComplexMatrix c = completeness();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    if (lmax > 1.0 + tol.rec) {
        throw InvariantError("Kraus set is not trace non-increasing (largest eigenvalue of "
                             "sum K^dagger K is " + format_number(lmax) + ")");
    }
    trace_preserving_ = max_abs_diff(c, ComplexMatrix::Identity(d_in_, d_in_)) <= tol.rec;
}

ComplexMatrix KrausSet::completeness() const {
    ComplexMatrix c = ComplexMatrix::Zero(d_in_, d_in_);
    for (const auto &k : ops_) c += k.adjoint() * k;
    return c;
}

ComplexMatrix KrausSet::apply(const ComplexMatrix &x) const {
    if (x.rows() != d_in_ || x.cols() != d_in_) {
        throw DimensionError("Kraus set expects " + std::to_string(d_in_) + "x" + std::to_string(d_in_) +
                             " input");
    }
    ComplexMatrix out = ComplexMatrix::Zero(d_out_, d_out_);
    for (const auto &k : ops_) out += k * x * k.adjoint();
    return out;
}

bool KrausSet::is_real() const {
    return std::all_of(ops_.begin(), ops_.end(), [](const ComplexMatrix &k) { return max_imag(k) <= 1e-9; });
}

// ---------------------------------------------------------------------------
// Covariance

double covariance_residual(const KrausSet &k) {
    const Index d = k.d_in();
    double worst = 0.0;
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(d, d);
            e(i, j) = 1.0;
            worst = std::max(worst, max_abs_diff(k.apply(e.transpose()), k.apply(e).transpose()));
        }
    }
    return worst;
}

double rho_covariance_residual(const KrausSet &k, const DensityMatrix &rho) {
    return max_abs_diff(k.apply(rho.matrix().transpose()), k.apply(rho.matrix()).transpose());
}

bool is_covariant(const KrausSet &k, double tol) { return covariance_residual(k) <= tol; }

KrausSet merge_cp_maps(const KrausSet &e1, const KrausSet &e2) {
    if (e1.d_in() != e2.d_in() || e1.d_out() != e2.d_out()) {
        throw DimensionError("merge_cp_maps: operator shapes differ");
    }
    const std::size_t n = std::max(e1.ops().size(), e2.ops().size());
    const ComplexMatrix zero = ComplexMatrix::Zero(e1.d_out(), e1.d_in());
    std::vector<ComplexMatrix> out;
    out.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const ComplexMatrix &p = j < e1.ops().size() ? e1.ops()[j] : zero;
        const ComplexMatrix &q = j < e2.ops().size() ? e2.ops()[j] : zero;
        out.emplace_back((p + q) / 2.0);
        out.emplace_back(Complex(0.0, 0.5) * (p - q));
    }
    return KrausSet(std::move(out));
}

KrausSet realify_covariant(const KrausSet &k, double tol) {
    const double r = covariance_residual(k);
    if (r > tol) {
        throw InvariantError("realify_covariant: map is not covariant (residual " + format_number(r) +
                             " exceeds " + format_number(tol) + ")");
    }
    return realified(k);
}

KrausSet symmetrize_rho_covariant(const KrausSet &k, const DensityMatrix &rho, double tol) {
    if (rho.dim() != k.d_in()) {
        throw DimensionError("symmetrize_rho_covariant: state dimension does not match map input");
    }
    const double r = rho_covariance_residual(k, rho);
    if (r > tol) {
        throw InvariantError("symmetrize_rho_covariant: map is not covariant on rho (residual " +
                             format_number(r) + ")");
    }
    return realified(k);
}

// ---------------------------------------------------------------------------
// Conversion rates

double prob_exact(const PureState &psi, const DensityMatrix &rho) {
    const double target = geometric_imaginarity(rho);
    if (target <= kZeroImaginarity) return 1.0;
    return std::min(geometric_imaginarity(psi) / target, 1.0);
}

double prob_upper_bound(const DensityMatrix &sigma, const DensityMatrix &rho) {
    const double target = geometric_imaginarity(rho);
    if (target <= kZeroImaginarity) return 1.0;
    return std::min(geometric_imaginarity(sigma) / target, 1.0);
}

double min_geometric_in_ball(const DensityMatrix &rho, double f) {
    require_unit_interval(f, "fidelity");
    const double angle = std::max(asin_sqrt(geometric_imaginarity(rho)) - acos_sqrt(f), 0.0);
    return std::pow(std::sin(angle), 2);
}

double max_geometric_in_ball(const PureState &psi, double f) {
    require_unit_interval(f, "fidelity");
    const double angle = std::min(asin_sqrt(geometric_imaginarity(psi)) + acos_sqrt(f), kQuarterPi);
    return std::pow(std::sin(angle), 2);
}

DensityMatrix min_imaginarity_state(const DensityMatrix &rho, double f) {
    require_unit_interval(f, "fidelity");
    if (f == 1.0) return rho;

    const double alpha = asin_sqrt(geometric_imaginarity(rho));
    const double beta = std::max(alpha - acos_sqrt(f), 0.0);
    const Ensemble members = equal_imaginarity_decomposition(rho);

    const Index d = rho.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (const EnsembleMember &m : members.members) {
        auto [re, im] = real_imag_split(m.state.amplitudes());
        const double nre = re.norm();
        const double nim = im.norm();
        ComplexVector phi = std::cos(beta) * (re / nre).cast<Complex>();
        if (nim > 1e-12) phi += Complex(0.0, std::sin(beta)) * (im / nim).cast<Complex>();
        out += m.weight * phi * phi.adjoint();
    }
    return DensityMatrix(out);
}

PureState max_imaginarity_state(const PureState &psi, double f) {
    require_unit_interval(f, "fidelity");
    if (f == 1.0) return psi;
    if (psi.dim() < 2) {
        throw DimensionError("max_imaginarity_state needs dimension >= 2");
    }
    const double alpha = asin_sqrt(geometric_imaginarity(psi));
    const double gamma = std::min(alpha + acos_sqrt(f), kQuarterPi);

    auto [re, im] = real_imag_split(psi.amplitudes());
    const RealVector a = re.normalized();
    const RealVector a_perp = im.norm() > 1e-12 ? RealVector(im.normalized()) : real_orthogonal(a);
    ComplexVector out = std::cos(gamma) * a.cast<Complex>() + Complex(0.0, std::sin(gamma)) * a_perp.cast<Complex>();
    return PureState::normalized(out);
}

ConversionResult approx_prob(const PureState &psi, const DensityMatrix &rho, double f) {
    require_unit_interval(f, "fidelity");
    const double g_src = geometric_imaginarity(psi);
    ConversionResult r;
    r.fidelity = f;
    r.params.alpha = asin_sqrt(g_src);
    r.params.beta = asin_sqrt(geometric_imaginarity(rho));
    r.params.k = acos_sqrt(f);
    r.params.m1 = r.params.alpha - r.params.beta + r.params.k;
    if (r.params.m1 >= 0.0) {
        r.probability = 1.0;
    } else {
        const double s = std::sin(r.params.beta - r.params.k);
        r.probability = std::min(g_src / (s * s), 1.0);
    }
    return r;
}

ConversionResult approx_fidelity(const PureState &psi, const DensityMatrix &rho, double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError("probability must lie in (0, 1], got " + format_number(p));
    }
    const double g_src = geometric_imaginarity(psi);
    const double g_dst = geometric_imaginarity(rho);
    ConversionResult r;
    r.probability = p;
    r.params.alpha = asin_sqrt(g_src);
    r.params.beta = asin_sqrt(g_dst);
    if (g_dst <= kZeroImaginarity || p <= g_src / g_dst) {
        r.fidelity = 1.0;
    } else {
        const double c = std::cos(r.params.beta - asin_sqrt(g_src / p));
        r.fidelity = std::clamp(c * c, 0.0, 1.0);
    }
    r.params.k = acos_sqrt(r.fidelity);
    r.params.m1 = r.params.alpha - r.params.beta + r.params.k;
    return r;
}

} // namespace imkit
