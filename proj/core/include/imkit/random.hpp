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

// Seeded samplers for states and channels.

#ifndef IMKIT_RANDOM_HPP
#define IMKIT_RANDOM_HPP

#include <random>

#include "imkit/linalg.hpp"
#include "imkit/transforms.hpp"

namespace imkit::random {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Index rows, Index cols, Rng &rng);

/// Matrix with i.i.d. standard real Gaussian entries.
RealMatrix real_gaussian(Index rows, Index cols, Rng &rng);

/// Haar-random unitary.
ComplexMatrix unitary(Index n, Rng &rng);

/// Haar-random pure state.
PureState pure_state(Index n, Rng &rng);

/// Pure state with real amplitudes.
PureState real_pure_state(Index n, Rng &rng);

/// Induced-measure mixed state G G^dagger / Tr, G of size n x rank.
DensityMatrix density_matrix(Index n, Rng &rng, Index rank = 0);

/// Mixed state with real entries.
DensityMatrix real_density_matrix(Index n, Rng &rng, Index rank = 0);

/// CPTP map with `num_ops` complex Kraus operators. Throws DimensionError
/// unless num_ops * d_out >= d_in.
KrausSet channel(Index d_in, Index d_out, Index num_ops, Rng &rng);

/// CPTP map with real Kraus operators.
KrausSet real_channel(Index d_in, Index d_out, Index num_ops, Rng &rng);

/// Covariant CPTP map written with complex Kraus operators:
/// {L_j / sqrt2} together with {L_j* / sqrt2} for a random channel {L_j}.
KrausSet covariant_channel(Index d_in, Index d_out, Index num_ops, Rng &rng);

} // namespace imkit::random

#endif // IMKIT_RANDOM_HPP
