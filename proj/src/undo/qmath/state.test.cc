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

#include <numbers>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace undo;
using namespace undo::testing;

static constexpr double H = std::numbers::sqrt2 / 2;

static void expect_amplitudes(const StateVector &s, std::vector<cplx> expected) {
    ASSERT_EQ(s.dim(), expected.size());
    for (size_t k = 0; k < expected.size(); k++) {
        ASSERT_LT(std::abs(s[k] - expected[k]), 1e-15) << "amplitude " << k;
    }
}

TEST(state, rejects_unnormalized_and_bad_sizes) {
    ASSERT_THROW(StateVector({1, 1}), std::invalid_argument);
    ASSERT_THROW(StateVector({1, 0, 0}), std::invalid_argument);
    ASSERT_THROW(StateVector(std::vector<cplx>(16, 0.25)), std::invalid_argument);
    ASSERT_THROW(StateVector::normalized({0, 0}), std::invalid_argument);
    ASSERT_EQ(StateVector::normalized({3, 4}).num_qubits(), 1u);
}

TEST(state, bell_states) {
    expect_amplitudes(bell_state(BellKind::PsiMinus), {0, H, -H, 0});
    expect_amplitudes(bell_state(BellKind::PhiPlus), {H, 0, 0, H});
    const BellKind kinds[] = {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};
    for (auto a : kinds) {
        for (auto b : kinds) {
            ASSERT_NEAR(std::abs(inner(bell_state(a), bell_state(b))), a == b ? 1 : 0, 1e-15);
        }
    }
}

TEST(state, apply_identity_is_noop) {
    Rng rng(4);
    auto s = random_state(rng, 3);
    for (size_t q = 0; q < 3; q++) {
        auto out = apply_gate(s, gates::I(), {q});
        for (size_t k = 0; k < s.dim(); k++) {
            ASSERT_LT(std::abs(out[k] - s[k]), 1e-15);
        }
    }
}

TEST(state, apply_x_to_second_qubit_of_singlet_matches_dense_product) {
    auto psi = bell_state(BellKind::PsiMinus);
    auto expected = kron(gates::I(), gates::X()).apply(psi.amplitudes());
    auto out = apply_gate(psi, gates::X(), {1});
    expect_amplitudes(out, expected);
    // (|00> - |11>)/sqrt2
    expect_amplitudes(out, {H, 0, 0, -H});
}

TEST(state, apply_gate_matches_dense_embedding) {
    Rng rng(8);
    for (int trial = 0; trial < 100; trial++) {
        auto s = random_state(rng, 3);
        auto u = random_unitary(rng);
        size_t q = trial % 3;
        auto dense = embed_single(u, q, 3).apply(s.amplitudes());
        expect_amplitudes(apply_gate(s, u, {q}), dense);

        // kron(a, b) on targets (2, 0) puts a on qubit 2 and b on qubit 0.
        auto a = random_unitary(rng);
        auto b = random_unitary(rng);
        auto full = kron(kron(b, gates::I()), a);
        for (size_t k = 0; k < 8; k++) {
            ASSERT_LT(std::abs(apply_gate(s, kron(a, b), {2, 0})[k] - full.apply(s.amplitudes())[k]), 1e-14);
        }
    }
}

TEST(state, two_qubit_gate_target_order) {
    // CNOT with control on targets[0].
    ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    // |100> with control qubit 0, target qubit 2 -> |101>
    auto out = apply_gate(StateVector::basis(3, 0b100), cnot, {0, 2});
    expect_amplitudes(out, {0, 0, 0, 0, 0, 1, 0, 0});
    // Reversed: control qubit 2 (which is 0) leaves the state alone.
    out = apply_gate(StateVector::basis(3, 0b100), cnot, {2, 0});
    expect_amplitudes(out, {0, 0, 0, 0, 1, 0, 0, 0});
}

TEST(state, singlet_is_invariant_under_u_tensor_u) {
    Rng rng(9);
    auto psi = bell_state(BellKind::PsiMinus);
    for (int trial = 0; trial < 1000; trial++) {
        auto u = random_unitary(rng);
        auto out = apply_gate(apply_gate(psi, u, {0}), u, {1});
        ASSERT_NEAR(state_fidelity(out, psi), 1, 1e-12);
    }
}

TEST(state, apply_gate_preserves_norm) {
    Rng rng(10);
    for (int trial = 0; trial < 200; trial++) {
        auto s = random_state(rng, 1 + trial % 3);
        auto u = random_unitary(rng);
        auto out = apply_gate(s, u, {trial % s.num_qubits()});
        double n = 0;
        for (auto a : out.amplitudes()) {
            n += std::norm(a);
        }
        ASSERT_NEAR(n, 1, 1e-12);
    }
}

TEST(state, apply_gate_errors) {
    auto s = StateVector::basis(2, 0);
    ASSERT_THROW(apply_gate(s, gates::X(), {2}), std::invalid_argument);
    ASSERT_THROW(apply_gate(s, kron(gates::X(), gates::X()), {1, 1}), std::invalid_argument);
    ASSERT_THROW(apply_gate(s, kron(gates::X(), gates::X()), {0}), std::invalid_argument);
    ASSERT_THROW(apply_gate(s, ComplexMatrix({{1, 1}, {0, 1}}), {0}), std::invalid_argument);
}

TEST(state, density_matrix_validation) {
    ASSERT_NO_THROW(DensityMatrix::from_pure(bell_state(BellKind::PhiPlus)));
    ASSERT_THROW(DensityMatrix(ComplexMatrix({{1, 0}, {0, 1}})), std::invalid_argument);
    ASSERT_THROW(DensityMatrix(ComplexMatrix({{0.5, 0.1}, {0.2, 0.5}})), std::invalid_argument);
    ASSERT_THROW(DensityMatrix(ComplexMatrix({{1.5, 0}, {0, -0.5}})), std::invalid_argument);
    DensityMatrix rho(ComplexMatrix({{0.75, 0}, {0, 0.25}}));
    ASSERT_NEAR(rho.expectation(gates::Z()), 0.5, 1e-15);
    ASSERT_EQ(rho.num_qubits(), 1u);
}

TEST(state, tensor_orders_qubits_left_to_right) {
    auto s = tensor(StateVector::basis(1, 1), StateVector::basis(2, 1));
    expect_amplitudes(s, {0, 0, 0, 0, 0, 1, 0, 0});
}
