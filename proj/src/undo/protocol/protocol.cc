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

#include "undo/protocol/protocol.h"

#include <stdexcept>
#include <string>

namespace undo {

UnitaryOracle::UnitaryOracle(ComplexMatrix hidden) : hidden_(std::move(hidden)) {
    if (hidden_.rows() != 2 || hidden_.cols() != 2 || !hidden_.is_unitary()) {
        throw std::invalid_argument("UnitaryOracle needs a 2x2 unitary");
    }
}

StateVector UnitaryOracle::apply(const StateVector &state, size_t qubit) {
    auto out = apply_gate(state, hidden_, {qubit});
    queries_++;
    return out;
}

DensityMatrix UnitaryOracle::apply(const DensityMatrix &rho, size_t qubit) {
    auto g = embed_single(hidden_, qubit, rho.num_qubits());
    ComplexMatrix out = g * rho.matrix() * g.adjoint();
    // Re-symmetrize so round-off does not trip the Hermiticity check.
    out = (out + out.adjoint()) * cplx{0.5};
    queries_++;
    return DensityMatrix(std::move(out));
}

BellOutcome::BellOutcome(int i, int j) : i(static_cast<uint8_t>(i)), j(static_cast<uint8_t>(j)) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
        throw std::invalid_argument("BellOutcome bits must be 0 or 1");
    }
}

BellOutcome BellOutcome::from_index(size_t index) {
    if (index > 3) {
        throw std::invalid_argument("BellOutcome index must be in [0, 3]");
    }
    return BellOutcome(static_cast<int>(index >> 1), static_cast<int>(index & 1));
}

BellKind BellOutcome::bell_kind() const {
    static constexpr BellKind table[4] = {
        BellKind::PsiMinus,
        BellKind::PsiPlus,
        BellKind::PhiMinus,
        BellKind::PhiPlus,
    };
    return table[index()];
}

StateVector prepare_resource(UnitaryOracle &oracle) {
    return oracle.apply(bell_state(BellKind::PsiMinus), 0);
}

static void require_three_qubits(size_t n, const char *who) {
    if (n != 3) {
        throw std::invalid_argument(std::string(who) + ": expected a 3-qubit joint state");
    }
}

/// Unnormalized qubit-2 amplitudes after projecting qubits 0-1 onto `bell`.
static std::array<cplx, 2> project_remnant(const StateVector &joint, const StateVector &bell) {
    std::array<cplx, 2> r{};
    for (size_t ab = 0; ab < 4; ab++) {
        cplx w = std::conj(bell[ab]);
        r[0] += w * joint[2 * ab];
        r[1] += w * joint[2 * ab + 1];
    }
    return r;
}

std::array<double, 4> bsm_probabilities(const StateVector &joint) {
    require_three_qubits(joint.num_qubits(), "bsm_probabilities");
    std::array<double, 4> p{};
    for (size_t k = 0; k < 4; k++) {
        auto r = project_remnant(joint, bell_state(BellOutcome::from_index(k).bell_kind()));
        p[k] = std::norm(r[0]) + std::norm(r[1]);
    }
    return p;
}

double exact_success_probability(const StateVector &joint) {
    return bsm_probabilities(joint)[BellOutcome(0, 0).index()];
}

BsmResult bsm_project(const StateVector &joint, BellOutcome outcome) {
    require_three_qubits(joint.num_qubits(), "bsm_project");
    auto r = project_remnant(joint, bell_state(outcome.bell_kind()));
    if (std::norm(r[0]) + std::norm(r[1]) < 1e-24) {
        throw std::invalid_argument("bsm_project: outcome has zero probability");
    }
    return {outcome, StateVector::normalized({r[0], r[1]})};
}

BsmResult bsm_sample(const StateVector &joint, Rng &rng) {
    auto p = bsm_probabilities(joint);
    double u = uniform01(rng);
    size_t k = 0;
    double acc = p[0];
    while (k < 3 && (u >= acc || p[k] == 0)) {
        k++;
        acc += p[k];
    }
    return bsm_project(joint, BellOutcome::from_index(k));
}

HeraldedState bsm_project(const DensityMatrix &joint, BellOutcome outcome) {
    require_three_qubits(joint.num_qubits(), "bsm_project");
    auto bell = bell_state(outcome.bell_kind());
    const auto &rho = joint.matrix();
    ComplexMatrix sigma(2, 2);
    for (size_t ab = 0; ab < 4; ab++) {
        for (size_t cd = 0; cd < 4; cd++) {
            cplx w = std::conj(bell[ab]) * bell[cd];
            if (w == cplx{0}) {
                continue;
            }
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    sigma(k, l) += w * rho(2 * ab + k, 2 * cd + l);
                }
            }
        }
    }
    double prob = sigma.trace().real();
    if (prob < 1e-24) {
        throw std::invalid_argument("bsm_project: outcome has zero probability");
    }
    sigma *= cplx{1 / prob};
    sigma = (sigma + sigma.adjoint()) * cplx{0.5};
    return {prob, DensityMatrix(std::move(sigma))};
}

StateVector restore_input(const StateVector &remnant, BellOutcome outcome, UnitaryOracle &oracle) {
    StateVector s = oracle.apply(remnant, 0);
    if (outcome.i) {
        s = apply_gate(s, gates::X(), {0});
    }
    if (outcome.j) {
        s = apply_gate(s, gates::Z(), {0});
    }
    return s;
}

ProtocolResult run_inversion(UnitaryOracle &oracle, const StateVector &input, Rng &rng, const RunOptions &options) {
    if (options.max_rounds == 0) {
        throw std::invalid_argument("run_inversion: max_rounds must be at least 1");
    }
    if (input.num_qubits() != 1) {
        throw std::invalid_argument("run_inversion: input must be a single qubit");
    }
    size_t start = oracle.query_count();
    ProtocolResult result{false, input, 0, 0, {}};
    StateVector current = input;
    while (result.rounds < options.max_rounds) {
        result.rounds++;
        StateVector joint = tensor(current, prepare_resource(oracle));
        BsmResult bsm = (options.force_success && result.rounds == 1) ? bsm_project(joint, BellOutcome(0, 0))
                                                                       : bsm_sample(joint, rng);
        result.outcome_history.push_back(bsm.outcome);
        if (bsm.outcome.is_success()) {
            result.success = true;
            result.output_state = bsm.remnant;
            break;
        }
        current = restore_input(bsm.remnant, bsm.outcome, oracle);
        result.output_state = current;
    }
    result.queries = oracle.query_count() - start;
    return result;
}

}  // namespace undo
