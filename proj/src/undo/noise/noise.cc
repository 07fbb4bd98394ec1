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

#include "undo/noise/noise.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace undo {

std::string_view noise_target_name(NoiseTarget target) {
    switch (target) {
        case NoiseTarget::Output:
            return "output";
        case NoiseTarget::Resource:
            return "resource";
        case NoiseTarget::None:
            return "none";
    }
    throw std::invalid_argument("unknown NoiseTarget");
}

NoiseTarget parse_noise_target(std::string_view text) {
    if (text == "output") {
        return NoiseTarget::Output;
    }
    if (text == "resource") {
        return NoiseTarget::Resource;
    }
    if (text == "none") {
        return NoiseTarget::None;
    }
    throw std::invalid_argument("unknown noise target '" + std::string(text) + "'");
}

static void require_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("depolarizing probability " + std::to_string(p) + " is outside [0, 1]");
    }
}

void NoiseConfig::validate() const {
    require_probability(depolarizing_p);
}

DensityMatrix depolarize(const DensityMatrix &rho, double p) {
    require_probability(p);
    if (rho.dim() != 2) {
        throw std::invalid_argument("depolarize expects a single-qubit state");
    }
    return DensityMatrix(rho.matrix() * cplx{1 - p} + ComplexMatrix::identity(2) * cplx{p / 2});
}

DensityMatrix depolarize_qubit(const DensityMatrix &rho, size_t qubit, double p) {
    require_probability(p);
    size_t n = rho.num_qubits();
    const auto &m = rho.matrix();
    ComplexMatrix out = m * cplx{1 - 3 * p / 4};
    for (const auto &pauli : {gates::X(), gates::Y(), gates::Z()}) {
        auto g = embed_single(pauli, qubit, n);
        out += g * m * g * cplx{p / 4};
    }
    out = (out + out.adjoint()) * cplx{0.5};
    return DensityMatrix(std::move(out));
}

double calibrate_p_for_fidelity(double target_fidelity) {
    if (!(target_fidelity >= 0.25 && target_fidelity <= 1)) {
        throw std::invalid_argument(
            "target fidelity " + std::to_string(target_fidelity) + " is outside [0.25, 1]");
    }
    return 4 * (1 - target_fidelity) / 3;
}

}  // namespace undo
