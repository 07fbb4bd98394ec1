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

#ifndef UNDO_PROTOCOL_PROTOCOL_H
#define UNDO_PROTOCOL_PROTOCOL_H

#include <array>
#include <cstdint>
#include <vector>

#include "undo/qmath/matrix.h"
#include "undo/qmath/state.h"
#include "undo/rng.h"

namespace undo {

/// Black-box access to a hidden single-qubit unitary. The matrix can only be
/// applied to a qubit, and every application counts as one query.
class UnitaryOracle {
   public:
    /// Throws unless `hidden` is a 2x2 unitary.
    explicit UnitaryOracle(ComplexMatrix hidden);

    StateVector apply(const StateVector &state, size_t qubit);
    DensityMatrix apply(const DensityMatrix &rho, size_t qubit);

    size_t query_count() const { return queries_; }

   private:
    ComplexMatrix hidden_;
    size_t queries_ = 0;
};

/// Result (i, j) of the Bell measurement on qubits 0 and 1. The remnant on
/// qubit 2 is U^{-1} X^i Z^j |phi> up to phase:
///
///     psi- <-> (0, 0)    psi+ <-> (0, 1)    phi- <-> (1, 0)    phi+ <-> (1, 1)
struct BellOutcome {
    uint8_t i = 0;
    uint8_t j = 0;

    constexpr BellOutcome() = default;
    BellOutcome(int i, int j);
    static BellOutcome from_index(size_t index);

    /// 2i + j
    size_t index() const { return 2 * size_t{i} + j; }
    bool is_success() const { return i == 0 && j == 0; }
    BellKind bell_kind() const;

    bool operator==(const BellOutcome &) const = default;
};

/// (U (x) I)|psi->, one oracle query.
StateVector prepare_resource(UnitaryOracle &oracle);

/// Born-rule probability of each Bell outcome on qubits 0-1 of a 3-qubit
/// state, indexed by BellOutcome::index().
std::array<double, 4> bsm_probabilities(const StateVector &joint);

/// Probability of the (0, 0) outcome.
double exact_success_probability(const StateVector &joint);

struct BsmResult {
    BellOutcome outcome;
    StateVector remnant;  // normalized state of qubit 2
};

BsmResult bsm_sample(const StateVector &joint, Rng &rng);

/// Post-measurement state for a chosen outcome. Throws if that outcome has
/// (numerically) zero probability.
BsmResult bsm_project(const StateVector &joint, BellOutcome outcome);

struct HeraldedState {
    double probability;
    DensityMatrix remnant;
};

/// Mixed-state version of bsm_project for an 8x8 joint density matrix.
HeraldedState bsm_project(const DensityMatrix &joint, BellOutcome outcome);

/// Undo the byproduct of a failed round: U, then X^i, then Z^j, restoring
/// the original input. One oracle query.
StateVector restore_input(const StateVector &remnant, BellOutcome outcome, UnitaryOracle &oracle);

struct RunOptions {
    size_t max_rounds = 64;
    /// Debug: force the first Bell outcome to (0, 0).
    bool force_success = false;
};

struct ProtocolResult {
    bool success = false;
    /// U^{-1}|input> on success; the restored input otherwise.
    StateVector output_state;
    size_t rounds = 0;
    size_t queries = 0;
    std::vector<BellOutcome> outcome_history;
};

/// Repeat-until-success inversion. Each round prepares a fresh resource
/// (1 query) and measures; on a non-(0,0) outcome the input is restored
/// (1 query) and the round repeats. A success after r rounds costs
/// 2(r - 1) + 1 queries. Throws std::invalid_argument if max_rounds is 0
/// or the input is not one qubit.
ProtocolResult run_inversion(
    UnitaryOracle &oracle, const StateVector &input, Rng &rng, const RunOptions &options = {});

}  // namespace undo

#endif
