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

#include "undo/tomography/choi.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "undo/qmath/unitary.h"

namespace undo {

ChiMatrix::ChiMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 4 || m_.cols() != 4) {
        throw std::invalid_argument("ChiMatrix must be 4x4");
    }
    if (!m_.is_hermitian(1e-10)) {
        throw std::invalid_argument("ChiMatrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cplx{1}) > 1e-10) {
        throw std::invalid_argument("ChiMatrix trace is not 1");
    }
    double smallest = hermitian_eigenvalues(m_).front();
    if (smallest < -1e-8) {
        throw std::invalid_argument("ChiMatrix has negative eigenvalue " + std::to_string(smallest));
    }
}

ChiMatrix ChiMatrix::normalized(const ComplexMatrix &m) {
    ComplexMatrix h = (m + m.adjoint()) * cplx{0.5};
    double t = h.trace().real();
    if (!(t > 0)) {
        throw std::invalid_argument("ChiMatrix::normalized: non-positive trace");
    }
    return ChiMatrix(h * cplx{1 / t});
}

ComplexMatrix ChiMatrix::input_marginal() const {
    ComplexMatrix r(2, 2);
    for (size_t a = 0; a < 2; a++) {
        for (size_t a2 = 0; a2 < 2; a2++) {
            r(a, a2) = m_(2 * a, 2 * a2) + m_(2 * a + 1, 2 * a2 + 1);
        }
    }
    return r;
}

bool ChiMatrix::is_trace_preserving(double tol) const {
    return input_marginal().max_abs_diff(ComplexMatrix::identity(2) * cplx{0.5}) < tol;
}

ChiMatrix choi_of_unitary(const ComplexMatrix &v) {
    if (v.rows() != 2 || !v.is_unitary()) {
        throw std::invalid_argument("choi_of_unitary needs a 2x2 unitary");
    }
    auto g = kron(gates::I(), v);
    return ChiMatrix::normalized(g * outer(bell_state(BellKind::PhiPlus)) * g.adjoint());
}

ComplexMatrix channel_output(const ChiMatrix &chi, const DensityMatrix &rho_in) {
    if (rho_in.dim() != 2) {
        throw std::invalid_argument("channel_output expects a single-qubit input");
    }
    // [Tr_in((rho^T (x) I) chi)]_{b b'} = sum_{a a'} rho_{a a'} chi_{(a b), (a' b')}
    ComplexMatrix out(2, 2);
    for (size_t b = 0; b < 2; b++) {
        for (size_t b2 = 0; b2 < 2; b2++) {
            cplx acc = 0;
            for (size_t a = 0; a < 2; a++) {
                for (size_t a2 = 0; a2 < 2; a2++) {
                    acc += rho_in(a, a2) * chi(2 * a + b, 2 * a2 + b2);
                }
            }
            out(b, b2) = 2.0 * acc;
        }
    }
    return out;
}

DensityMatrix apply_channel(const ChiMatrix &chi, const DensityMatrix &rho_in) {
    ComplexMatrix out = channel_output(chi, rho_in);
    out = (out + out.adjoint()) * cplx{0.5};
    double t = out.trace().real();
    if (!(t > 1e-15)) {
        throw std::invalid_argument("apply_channel: channel annihilates this input");
    }
    return DensityMatrix(out * cplx{1 / t});
}

double process_fidelity(const ComplexMatrix &chi, const ComplexMatrix &chi_ideal) {
    if (chi.rows() != 4 || chi.cols() != 4 || chi_ideal.rows() != 4 || chi_ideal.cols() != 4) {
        throw std::invalid_argument("process_fidelity expects 4x4 matrices");
    }
    double ta = chi.trace().real();
    double tb = chi_ideal.trace().real();
    if (ta == 0 || tb == 0) {
        throw std::invalid_argument("process_fidelity: zero-trace argument");
    }
    return (chi * chi_ideal).trace().real() / (ta * tb);
}

double process_fidelity(const ChiMatrix &chi, const ChiMatrix &chi_ideal) {
    return process_fidelity(chi.matrix(), chi_ideal.matrix());
}

}  // namespace undo
