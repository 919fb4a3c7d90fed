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

#ifndef IMKIT_TESTS_FIXTURES_HPP
#define IMKIT_TESTS_FIXTURES_HPP

#include <cmath>
#include <numbers>

#include "imkit/linalg.hpp"

namespace fixtures {

using imkit::Complex;
using imkit::ComplexMatrix;
using imkit::ComplexVector;

inline const Complex kI{0.0, 1.0};

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, -kI, kI, 0.0;
    return m;
}

inline ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

inline ComplexVector ket(std::initializer_list<Complex> amps) {
    ComplexVector v(static_cast<imkit::Index>(amps.size()));
    imkit::Index k = 0;
    for (const Complex &a : amps) v(k++) = a;
    return v;
}

/// (|0> + i|1>) / sqrt2.
inline imkit::PureState plus_i() {
    const double s = 1.0 / std::numbers::sqrt2;
    return imkit::PureState(ket({s, s * kI}));
}

/// cos(t)|0> + i sin(t)|1>.
inline imkit::PureState tilted(double t) { return imkit::PureState(ket({std::cos(t), std::sin(t) * kI})); }

/// (I + sigma_y (x) sigma_y) / 4, a real separable two-qubit state.
inline ComplexMatrix eta() {
    return (ComplexMatrix::Identity(4, 4) + imkit::tensor(pauli_y(), pauli_y())) / 4.0;
}

} // namespace fixtures

#endif // IMKIT_TESTS_FIXTURES_HPP
