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

#include "undo/qmath/state.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace undo {

static size_t qubits_for_dim(size_t dim) {
    if (dim < 2 || dim > (size_t{1} << MAX_QUBITS) || !std::has_single_bit(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not 2, 4 or 8");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

static double norm2(std::span<const cplx> v) {
    double t = 0;
    for (auto a : v) {
        t += std::norm(a);
    }
    return t;
}

StateVector::StateVector(std::vector<cplx> amplitudes)
    : num_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    double n = norm2(amplitudes_);
    if (std::abs(n - 1) > EXACT_TOL) {
        throw std::invalid_argument("StateVector is not normalized (norm^2 = " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
    double n = std::sqrt(norm2(amplitudes));
    if (n == 0 || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(size_t num_qubits, size_t index) {
    size_t dim = size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<cplx> amps(dim);
    amps[index] = 1;
    return StateVector(std::move(amps));
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner product dimension mismatch");
    }
    cplx t = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

double state_fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<cplx> amps;
    amps.reserve(a.dim() * b.dim());
    for (auto x : a.amplitudes()) {
        for (auto y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return StateVector::normalized(std::move(amps));
}

StateVector apply_gate(const StateVector &state, const ComplexMatrix &g, std::span<const size_t> targets) {
    size_t n = state.num_qubits();
    size_t k = targets.size();
    if (k == 0 || g.rows() != (size_t{1} << k) || g.cols() != g.rows()) {
        throw std::invalid_argument(
            "apply_gate: a " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " gate cannot act on " +
            std::to_string(k) + " target(s)");
    }
    size_t target_mask = 0;
    for (size_t t : targets) {
        if (t >= n) {
            throw std::invalid_argument("apply_gate: target qubit " + std::to_string(t) + " out of range");
        }
        size_t bit = size_t{1} << (n - 1 - t);
        if (target_mask & bit) {
            throw std::invalid_argument("apply_gate: duplicate target qubit " + std::to_string(t));
        }
        target_mask |= bit;
    }
    if (!g.is_unitary()) {
        throw std::invalid_argument("apply_gate: gate is not unitary");
    }

    auto scatter = [&](size_t base, size_t sub) {
        for (size_t j = 0; j < k; j++) {
            if (sub & (size_t{1} << (k - 1 - j))) {
                base |= size_t{1} << (n - 1 - targets[j]);
            }
        }
        return base;
    };

    std::vector<cplx> out(state.dim());
    for (size_t base = 0; base < state.dim(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (size_t row = 0; row < g.rows(); row++) {
            cplx acc = 0;
            for (size_t col = 0; col < g.cols(); col++) {
                acc += g(row, col) * state[scatter(base, col)];
            }
            out[scatter(base, row)] = acc;
        }
    }
    return StateVector::normalized(std::move(out));
}

StateVector apply_gate(const StateVector &state, const ComplexMatrix &g, std::initializer_list<size_t> targets) {
    return apply_gate(state, g, std::span<const size_t>(targets.begin(), targets.size()));
}

std::string_view bell_name(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus:
            return "phi+";
        case BellKind::PhiMinus:
            return "phi-";
        case BellKind::PsiPlus:
            return "psi+";
        case BellKind::PsiMinus:
            return "psi-";
    }
    throw std::invalid_argument("unknown BellKind");
}

StateVector bell_state(BellKind kind) {
    const double h = std::numbers::sqrt2 / 2;
    switch (kind) {
        case BellKind::PhiPlus:
            return StateVector({h, 0, 0, h});
        case BellKind::PhiMinus:
            return StateVector({h, 0, 0, -h});
        case BellKind::PsiPlus:
            return StateVector({0, h, h, 0});
        case BellKind::PsiMinus:
            return StateVector({0, h, -h, 0});
    }
    throw std::invalid_argument("unknown BellKind");
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (!rho_.is_square()) {
        throw std::invalid_argument("DensityMatrix must be square");
    }
    qubits_for_dim(rho_.rows());
    if (!rho_.is_hermitian()) {
        throw std::invalid_argument("DensityMatrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx{1}) > EXACT_TOL) {
        throw std::invalid_argument("DensityMatrix trace is not 1");
    }
    double smallest = hermitian_eigenvalues(rho_).front();
    if (smallest < -1e-10) {
        throw std::invalid_argument("DensityMatrix has negative eigenvalue " + std::to_string(smallest));
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    return DensityMatrix(outer(psi));
}

size_t DensityMatrix::num_qubits() const {
    return qubits_for_dim(dim());
}

double DensityMatrix::expectation(const ComplexMatrix &op) const {
    return (op * rho_).trace().real();
}

ComplexMatrix outer(const StateVector &psi) {
    ComplexMatrix m(psi.dim(), psi.dim());
    for (size_t r = 0; r < psi.dim(); r++) {
        for (size_t c = 0; c < psi.dim(); c++) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return m;
}

ComplexMatrix embed_single(const ComplexMatrix &g, size_t qubit, size_t num_qubits) {
    if (qubit >= num_qubits) {
        throw std::invalid_argument("embed_single: qubit out of range");
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (size_t q = 0; q < num_qubits; q++) {
        out = kron(out, q == qubit ? g : ComplexMatrix::identity(g.rows()));
    }
    return out;
}

}  // namespace undo
