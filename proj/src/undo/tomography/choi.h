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

#ifndef UNDO_TOMOGRAPHY_CHOI_H
#define UNDO_TOMOGRAPHY_CHOI_H

#include "undo/qmath/matrix.h"
#include "undo/qmath/state.h"

namespace undo {

/// Choi matrix of a single-qubit channel, chi = (I (x) E)(|phi+><phi+|),
/// normalized to unit trace. Index order is (input, output): the input
/// qubit owns the most significant bit.
class ChiMatrix {
   public:
    /// Throws unless 4x4, Hermitian within 1e-10, trace 1 within 1e-10, and
    /// all eigenvalues >= -1e-8.
    explicit ChiMatrix(ComplexMatrix m);
    /// Hermitian part of `m` divided by its trace, then validated.
    static ChiMatrix normalized(const ComplexMatrix &m);

    const ComplexMatrix &matrix() const { return m_; }
    cplx operator()(size_t r, size_t c) const { return m_(r, c); }

    /// Partial trace over the output qubit. I/2 for trace-preserving maps.
    ComplexMatrix input_marginal() const;
    bool is_trace_preserving(double tol = 1e-6) const;

   private:
    ComplexMatrix m_;
};

/// (I (x) V)|phi+><phi+|(I (x) V^dagger). Throws on non-unitary V.
ChiMatrix choi_of_unitary(const ComplexMatrix &v);

/// 2 Tr_in[(rho^T (x) I) chi], without renormalization. Trace 1 exactly when
/// chi is trace preserving on rho.
ComplexMatrix channel_output(const ChiMatrix &chi, const DensityMatrix &rho_in);

/// The channel's action, renormalized to unit trace (heralded reading). For a
/// trace-preserving chi this is exactly channel_output.
DensityMatrix apply_channel(const ChiMatrix &chi, const DensityMatrix &rho_in);

/// Tr[chi chi_ideal] / (Tr[chi] Tr[chi_ideal]). Throws on a zero trace or
/// non-4x4 input.
double process_fidelity(const ComplexMatrix &chi, const ComplexMatrix &chi_ideal);
double process_fidelity(const ChiMatrix &chi, const ChiMatrix &chi_ideal);

}  // namespace undo

#endif
