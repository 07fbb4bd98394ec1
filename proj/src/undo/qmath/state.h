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

#ifndef UNDO_QMATH_STATE_H
#define UNDO_QMATH_STATE_H

#include <span>
#include <string_view>
#include <vector>

#include "undo/qmath/matrix.h"

namespace undo {

inline constexpr size_t MAX_QUBITS = 3;

/// Normalized pure state of 1 to 3 qubits. Qubit 0 is the most significant
/// bit of the amplitude index.
class StateVector {
   public:
    /// Throws unless the length is 2, 4 or 8 and the norm is 1 within EXACT_TOL.
    explicit StateVector(std::vector<cplx> amplitudes);
    /// Rescales to unit norm first. Throws on the zero vector.
    static StateVector normalized(std::vector<cplx> amplitudes);
    static StateVector basis(size_t num_qubits, size_t index);

    size_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx operator[](size_t k) const { return amplitudes_[k]; }

   private:
    size_t num_qubits_ = 0;
    std::vector<cplx> amplitudes_;
};

/// <a|b>
cplx inner(const StateVector &a, const StateVector &b);
/// |<a|b>|^2
double state_fidelity(const StateVector &a, const StateVector &b);
StateVector tensor(const StateVector &a, const StateVector &b);

/// Applies G to the listed qubits. targets[0] owns the most significant bit of
/// G's index. G must be unitary so the result stays normalized.
StateVector apply_gate(const StateVector &state, const ComplexMatrix &g, std::span<const size_t> targets);
StateVector apply_gate(const StateVector &state, const ComplexMatrix &g, std::initializer_list<size_t> targets);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view bell_name(BellKind kind);
StateVector bell_state(BellKind kind);

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 4 or 8.
class DensityMatrix {
   public:
    /// Throws unless Hermitian and unit trace within EXACT_TOL, with all
    /// eigenvalues >= -1e-10.
    explicit DensityMatrix(ComplexMatrix rho);
    static DensityMatrix from_pure(const StateVector &psi);

    const ComplexMatrix &matrix() const { return rho_; }
    size_t dim() const { return rho_.rows(); }
    size_t num_qubits() const;
    cplx operator()(size_t r, size_t c) const { return rho_(r, c); }

    /// Re Tr[op rho].
    double expectation(const ComplexMatrix &op) const;

   private:
    ComplexMatrix rho_;
};

/// |psi><psi|
ComplexMatrix outer(const StateVector &psi);

/// Qubit `qubit` of an n-qubit operator; identity elsewhere.
ComplexMatrix embed_single(const ComplexMatrix &g, size_t qubit, size_t num_qubits);

}  // namespace undo

#endif
