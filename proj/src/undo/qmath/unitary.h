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

#ifndef UNDO_QMATH_UNITARY_H
#define UNDO_QMATH_UNITARY_H

#include "undo/qmath/matrix.h"

namespace undo {

/// Angles (radians) of the single-qubit template
///
///     [[cos t,              sin t e^{i p2}          ],
///      [sin t e^{i p1},    -cos t e^{i (p1 + p2)}   ]]
///
/// which covers every 2x2 unitary up to a global phase.
struct UnitaryParams {
    double theta = 0;
    double phi1 = 0;
    double phi2 = 0;
};

ComplexMatrix realize_unitary(const UnitaryParams &p);

/// U' = det(U) U^{-1} (the adjugate), so that U' U = det(U) I. For a
/// template-built U, det(U) = -e^{i (phi1 + phi2)}. Throws on non-unitary or
/// non-2x2 input.
ComplexMatrix conjugate_partner(const ComplexMatrix &u);

/// Inverse of a unitary (its adjoint). Throws on non-unitary input.
ComplexMatrix unitary_inverse(const ComplexMatrix &u);

namespace presets {
/// [[1/2, sqrt3/2], [-sqrt3/2, 1/2]]
ComplexMatrix U1();
/// diag(1, e^{i 4 pi / 3})
ComplexMatrix U2();
/// (1/2) [[-1-i, 1+i], [-1+i, -1+i]]
ComplexMatrix U3();
}  // namespace presets

}  // namespace undo

#endif
