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

#include "undo/qmath/unitary.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace undo {

ComplexMatrix realize_unitary(const UnitaryParams &p) {
    double c = std::cos(p.theta);
    double s = std::sin(p.theta);
    return {
        {c, s * std::polar(1.0, p.phi2)},
        {s * std::polar(1.0, p.phi1), -c * std::polar(1.0, p.phi1 + p.phi2)},
    };
}

static void require_2x2_unitary(const ComplexMatrix &u, const char *who) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument(std::string(who) + ": expected a 2x2 matrix");
    }
    if (!u.is_unitary()) {
        throw std::invalid_argument(std::string(who) + ": matrix is not unitary:\n" + u.str());
    }
}

ComplexMatrix conjugate_partner(const ComplexMatrix &u) {
    require_2x2_unitary(u, "conjugate_partner");
    return {
        {u(1, 1), -u(0, 1)},
        {-u(1, 0), u(0, 0)},
    };
}

ComplexMatrix unitary_inverse(const ComplexMatrix &u) {
    if (!u.is_unitary()) {
        throw std::invalid_argument("unitary_inverse: matrix is not unitary:\n" + u.str());
    }
    return u.adjoint();
}

namespace presets {
ComplexMatrix U1() {
    double h = std::sqrt(3.0) / 2;
    return {{0.5, h}, {-h, 0.5}};
}
ComplexMatrix U2() {
    return {{1, 0}, {0, std::polar(1.0, 4 * std::numbers::pi / 3)}};
}
ComplexMatrix U3() {
    return {
        {cplx{-0.5, -0.5}, cplx{0.5, 0.5}},
        {cplx{-0.5, 0.5}, cplx{-0.5, 0.5}},
    };
}
}  // namespace presets

}  // namespace undo
