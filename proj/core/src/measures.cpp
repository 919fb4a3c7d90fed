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

#include "imkit/measures.hpp"

#include <algorithm>
#include <cmath>

namespace imkit {

// With psi = x + iy, 1 - |<psi*|psi>|^2 = 4 (|x|^2 |y|^2 - (x.y)^2) for unit
// psi, and the bracket is the sum of squared 2x2 minors of [x y]. Evaluating
// it that way avoids cancellation for nearly real states.
double geometric_imaginarity(const PureState &psi) {
    const RealVector x = psi.amplitudes().real();
    const RealVector y = psi.amplitudes().imag();
    double gram = 0.0;
    for (Index i = 0; i < x.size(); ++i)
        for (Index j = i + 1; j < x.size(); ++j) {
            const double minor = x(i) * y(j) - x(j) * y(i);
            gram += minor * minor;
        }
    const double n2 = psi.amplitudes().squaredNorm();
    const double c = std::abs(psi.conjugate_overlap());
    return std::clamp(2.0 * gram / (n2 * (n2 + c)), 0.0, 0.5);
}

double geometric_imaginarity(const DensityMatrix &rho) {
    const double g = (1.0 - root_fidelity(rho, rho.transpose())) / 2.0;
    return std::clamp(g, 0.0, 0.5);
}

bool is_real(const DensityMatrix &rho) { return rho.max_imag() <= kRealTolerance; }

double real_entanglement_monotone(const BipartiteState &s, Side side) {
    const BipartiteOperator pt = partial_transpose(s, side);
    return trace_norm(s.matrix() - pt.mat);
}

double real_entanglement_infidelity(const BipartiteState &s, Side side) {
    const BipartiteOperator pt = partial_transpose(s, side);
    // The partial transpose keeps Hermiticity and trace, so positivity is the
    // only invariant that can fail here.
    const DensityMatrix pt_state(pt.mat, s.state().tolerances());
    return 1.0 - fidelity(s.state(), pt_state);
}

} // namespace imkit
