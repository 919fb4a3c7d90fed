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

#ifndef IMKIT_MEASURES_HPP
#define IMKIT_MEASURES_HPP

#include "imkit/linalg.hpp"

namespace imkit {

/// Entrywise threshold below which a matrix counts as real.
inline constexpr double kRealTolerance = 1e-9;

/// Geometric imaginarity of a pure state, (1 - |<psi*|psi>|) / 2, in [0, 1/2].
double geometric_imaginarity(const PureState &psi);

/// Geometric imaginarity of a mixed state, (1 - sqrt F(rho, rho^T)) / 2.
///
/// Coincides with the convex-roof of the pure-state expression and with one
/// minus the largest fidelity to a real state.
double geometric_imaginarity(const DensityMatrix &rho);

/// True when every entry has |Im| <= kRealTolerance.
bool is_real(const DensityMatrix &rho);

/// || rho - rho^{T_side} ||_1, in [0, 2]. Non-increasing under local real
/// operations and classical communication. Reported unnormalized.
double real_entanglement_monotone(const BipartiteState &s, Side side);

/// 1 - F(rho, rho^{T_side}).
///
/// Only defined when the partial transpose is itself a state; throws
/// InvariantError when rho^{T_side} has an eigenvalue below -tol_psd (which
/// happens for every NPT entangled state).
double real_entanglement_infidelity(const BipartiteState &s, Side side);

} // namespace imkit

#endif // IMKIT_MEASURES_HPP
