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

#ifndef UNDO_NOISE_NOISE_H
#define UNDO_NOISE_NOISE_H

#include <string_view>

#include "undo/qmath/state.h"

namespace undo {

enum class NoiseTarget {
    /// The teleported qubit after heralding.
    Output,
    /// Both resource qubits, before the Bell measurement.
    Resource,
    None,
};

std::string_view noise_target_name(NoiseTarget target);
/// Accepts "output", "resource", "none". Throws std::invalid_argument.
NoiseTarget parse_noise_target(std::string_view text);

struct NoiseConfig {
    double depolarizing_p = 0;
    NoiseTarget applied_to = NoiseTarget::Output;

    static NoiseConfig none() { return {0, NoiseTarget::None}; }
    /// Throws unless 0 <= depolarizing_p <= 1.
    void validate() const;
    bool active() const { return applied_to != NoiseTarget::None && depolarizing_p > 0; }
};

/// (1 - p) rho + p I/2 on a single qubit.
DensityMatrix depolarize(const DensityMatrix &rho, double p);

/// Depolarizes one qubit of a multi-qubit state:
/// (1 - p) rho + (p/4) sum_{P in I,X,Y,Z} P rho P on that qubit.
DensityMatrix depolarize_qubit(const DensityMatrix &rho, size_t qubit, double p);

/// Depolarizing strength whose unitary-channel process fidelity equals
/// target_fidelity: F = 1 - 3p/4, so p = 4 (1 - F) / 3. Requires
/// 0.25 <= target_fidelity <= 1 so that p lands in [0, 1].
double calibrate_p_for_fidelity(double target_fidelity);

}  // namespace undo

#endif
