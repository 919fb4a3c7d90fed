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

#include "imkit/decompositions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "imkit/measures.hpp"

namespace imkit {

double Ensemble::total_weight() const {
    double s = 0.0;
    for (const auto &m : members) s += m.weight;
    return s;
}

ComplexMatrix Ensemble::mixture() const {
    if (members.empty()) return {};
    const Index d = members.front().state.dim();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (const auto &m : members) out += m.weight * m.state.projector();
    return out;
}

ComplexMatrix Ensemble::subnormalized() const {
    if (members.empty()) return {};
    ComplexMatrix out(members.front().state.dim(), static_cast<Index>(members.size()));
    for (std::size_t j = 0; j < members.size(); ++j) {
        out.col(static_cast<Index>(j)) = std::sqrt(members[j].weight) * members[j].state.amplitudes();
    }
    return out;
}

double Ensemble::average_imaginarity() const {
    double s = 0.0;
    for (const auto &m : members) s += m.weight * geometric_imaginarity(m.state);
    return s;
}

namespace {

// Ensemble from subnormalized columns, dropping the light ones.
Ensemble from_columns(const ComplexMatrix &w, double prune_weight) {
    Ensemble e;
    for (Index j = 0; j < w.cols(); ++j) {
        const double weight = w.col(j).squaredNorm();
        if (weight < prune_weight) continue;
        e.members.push_back({weight, PureState::normalized(w.col(j))});
    }
    return e;
}

// I_g of the normalized version of a subnormalized vector.
double member_imaginarity(const ComplexVector &w) {
    const double n2 = w.squaredNorm();
    const double c = std::abs((w.array() * w.array()).sum()) / n2;
    return (1.0 - std::min(c, 1.0)) / 2.0;
}

} // namespace

Ensemble rotate(const Ensemble &e, const EnsembleRotation &r, double prune_weight) {
    const ComplexMatrix v = e.subnormalized();
    if (r.u.cols() != v.cols()) {
        throw DimensionError("ensemble rotation has " + std::to_string(r.u.cols()) +
                             " columns for an ensemble of " + std::to_string(v.cols()) + " members");
    }
    return from_columns(v * r.u.adjoint(), prune_weight);
}

ComplexMatrix ConjugateOrthogonalEnsemble::conjugate_gram() const {
    const ComplexMatrix w = ensemble.subnormalized();
    return w.adjoint() * w.conjugate();
}

ConjugateOrthogonalEnsemble conjugate_orthogonal_decomposition(const DensityMatrix &rho,
                                                               const DecompositionOptions &opt) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
    const RealVector &p = es.eigenvalues();

    Ensemble eigen;
    for (Index j = p.size() - 1; j >= 0; --j) {
        if (p(j) < opt.prune_weight) continue;
        eigen.members.push_back({p(j), PureState::normalized(es.eigenvectors().col(j))});
    }

    const ComplexMatrix v = eigen.subnormalized();
    const ComplexMatrix a = v.adjoint() * v.conjugate();
    const TakagiFactorization tk = takagi(a);

    // U = Q^dagger turns A into U A U^T = Sigma; the new columns are V U^dagger = V Q.
    const ComplexMatrix w = v * tk.q;

    ConjugateOrthogonalEnsemble out;
    std::vector<double> diag;
    for (Index j = 0; j < w.cols(); ++j) {
        const double weight = w.col(j).squaredNorm();
        if (weight < opt.prune_weight) continue;
        out.ensemble.members.push_back({weight, PureState::normalized(w.col(j))});
        diag.push_back(tk.sigma(j));
    }
    out.diag = Eigen::Map<RealVector>(diag.data(), static_cast<Index>(diag.size()));
    return out;
}

Ensemble equal_imaginarity_decomposition(const DensityMatrix &rho, const DecompositionOptions &opt) {
    const ConjugateOrthogonalEnsemble start = conjugate_orthogonal_decomposition(rho, opt);
    ComplexMatrix w = start.ensemble.subnormalized();
    const Index n = w.cols();

    double total_weight = 0.0;
    double total_conj = 0.0;
    for (Index j = 0; j < n; ++j) {
        total_weight += w.col(j).squaredNorm();
        total_conj += std::abs((w.col(j).array() * w.col(j).array()).sum());
    }
    const double target = (1.0 - total_conj / total_weight) / 2.0;

    std::vector<Index> active;
    for (Index j = 0; j < n; ++j) active.push_back(j);

    while (active.size() > 1) {
        std::erase_if(active, [&](Index j) {
            return std::abs(member_imaginarity(w.col(j)) - target) <= opt.equal_tol;
        });
        if (active.size() <= 1) break;

        Index hi = active.front();
        Index lo = active.front();
        for (Index j : active) {
            if (member_imaginarity(w.col(j)) > member_imaginarity(w.col(hi))) hi = j;
            if (member_imaginarity(w.col(j)) < member_imaginarity(w.col(lo))) lo = j;
        }

        const ComplexVector w_hi = w.col(hi);
        const ComplexVector w_lo = w.col(lo);
        auto excess = [&](double angle) {
            return member_imaginarity(std::cos(angle) * w_hi + std::sin(angle) * w_lo) - target;
        };

        double left = 0.0;
        double right = std::numbers::pi / 2.0;
        int iter = 0;
        while (right - left > opt.bisection_tol) {
            if (++iter > opt.max_iter) {
                throw ConvergenceError("equal_imaginarity_decomposition: mixing-angle bisection did not "
                                       "reach width " + format_number(opt.bisection_tol) + " in " +
                                       std::to_string(opt.max_iter) + " steps");
            }
            const double mid = 0.5 * (left + right);
            const double e = excess(mid);
            if (e == 0.0) {
                left = right = mid;
                break;
            }
            (e > 0.0 ? left : right) = mid;
        }
        const double angle = 0.5 * (left + right);
        w.col(hi) = std::cos(angle) * w_hi + std::sin(angle) * w_lo;
        w.col(lo) = -std::sin(angle) * w_hi + std::cos(angle) * w_lo;
        std::erase(active, hi);
    }

    return from_columns(w, opt.prune_weight);
}

Complex average_conjugate_product(const Ensemble &e) {
    Complex s = 0.0;
    for (const auto &m : e.members) s += m.weight * std::conj(m.state.conjugate_overlap());
    return s;
}

} // namespace imkit
