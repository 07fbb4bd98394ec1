// Copyright 2026 The Undo Authors
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

#ifndef UNDO_TESTS_TEST_UTIL_H
#define UNDO_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>

#include "undo/qmath/state.h"
#include "undo/qmath/unitary.h"
#include "undo/rng.h"

namespace undo::testing {

inline UnitaryParams random_params(Rng &rng) {
    return {
        uniform01(rng) * std::numbers::pi / 2,
        uniform01(rng) * 2 * std::numbers::pi,
        uniform01(rng) * 2 * std::numbers::pi,
    };
}

/// Template unitary times a random global phase.
inline ComplexMatrix random_unitary(Rng &rng) {
    auto u = realize_unitary(random_params(rng));
    return u * std::polar(1.0, uniform01(rng) * 2 * std::numbers::pi);
}

inline std::vector<cplx> random_amplitudes(Rng &rng, size_t dim) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(dim);
    for (auto &a : v) {
        a = {g(rng), g(rng)};
    }
    return v;
}

inline StateVector random_state(Rng &rng, size_t num_qubits) {
    return StateVector::normalized(random_amplitudes(rng, size_t{1} << num_qubits));
}

inline ComplexMatrix random_matrix(Rng &rng, size_t rows, size_t cols) {
    return ComplexMatrix(rows, cols, random_amplitudes(rng, rows * cols));
}

/// Random full-rank single-qubit density matrix G G^dagger / Tr.
inline DensityMatrix random_density(Rng &rng, size_t dim = 2) {
    auto g = random_matrix(rng, dim, dim);
    auto m = g * g.adjoint();
    m = (m + m.adjoint()) * cplx{0.5};
    return DensityMatrix(m * cplx{1 / m.trace().real()});
}

}  // namespace undo::testing

#endif
