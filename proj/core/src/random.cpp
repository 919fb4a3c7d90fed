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

#include "imkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace imkit::random {

ComplexMatrix ginibre(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) g(i, j) = Complex(n(rng), n(rng));
    return g;
}

RealMatrix real_gaussian(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    RealMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) g(i, j) = n(rng);
    return g;
}

ComplexMatrix unitary(Index n, Rng &rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(n, n, rng));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so Q is Haar distributed.
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

PureState pure_state(Index n, Rng &rng) { return PureState::normalized(ginibre(n, 1, rng).col(0)); }

PureState real_pure_state(Index n, Rng &rng) {
    return PureState::normalized(real_gaussian(n, 1, rng).col(0).cast<Complex>());
}

DensityMatrix density_matrix(Index n, Rng &rng, Index rank) {
    const ComplexMatrix g = ginibre(n, rank > 0 ? rank : n, rng);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix((m + m.adjoint()) / 2.0);
}

DensityMatrix real_density_matrix(Index n, Rng &rng, Index rank) {
    const RealMatrix g = real_gaussian(n, rank > 0 ? rank : n, rng);
    RealMatrix m = g * g.transpose();
    m /= m.trace();
    return DensityMatrix(m.cast<Complex>());
}

namespace {

// Rescales {G_k} to sum K^dagger K = I via K_k = G_k (sum G^dagger G)^{-1/2}.
std::vector<ComplexMatrix> complete(std::vector<ComplexMatrix> ops) {
    ComplexMatrix s = ComplexMatrix::Zero(ops.front().cols(), ops.front().cols());
    for (const auto &g : ops) s += g.adjoint() * g;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
    const ComplexMatrix inv_sqrt =
        es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
    for (auto &g : ops) g = g * inv_sqrt;
    return ops;
}

void require_enough_ops(Index d_in, Index d_out, Index num_ops) {
    if (d_in <= 0 || d_out <= 0 || num_ops * d_out < d_in) {
        throw DimensionError("random channel " + std::to_string(d_in) + " -> " + std::to_string(d_out) + " needs at least " +
                             std::to_string((d_in + d_out - 1) / std::max<Index>(d_out, 1)) + " Kraus operators");
    }
}

} // namespace

KrausSet channel(Index d_in, Index d_out, Index num_ops, Rng &rng) {
    require_enough_ops(d_in, d_out, num_ops);
    std::vector<ComplexMatrix> ops;
    for (Index k = 0; k < num_ops; ++k) ops.push_back(ginibre(d_out, d_in, rng));
    return KrausSet(complete(std::move(ops)));
}

KrausSet real_channel(Index d_in, Index d_out, Index num_ops, Rng &rng) {
    require_enough_ops(d_in, d_out, num_ops);
    std::vector<ComplexMatrix> ops;
    for (Index k = 0; k < num_ops; ++k) ops.push_back(real_gaussian(d_out, d_in, rng).cast<Complex>());
    ops = complete(std::move(ops));
    for (auto &k : ops) k = k.real().cast<Complex>();
    return KrausSet(std::move(ops));
}

KrausSet covariant_channel(Index d_in, Index d_out, Index num_ops, Rng &rng) {
    const KrausSet base = channel(d_in, d_out, num_ops, rng);
    std::vector<ComplexMatrix> ops;
    const double s = 1.0 / std::numbers::sqrt2;
    for (const auto &l : base.ops()) ops.push_back(s * l);
    for (const auto &l : base.ops()) ops.push_back(s * l.conjugate());
    return KrausSet(std::move(ops));
}

} // namespace imkit::random
