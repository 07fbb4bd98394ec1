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

#include "undo/tomography/heralded_channel.h"

#include <memory>
#include <stdexcept>

namespace undo {

DensityMatrix heralded_output(UnitaryOracle &oracle, const DensityMatrix &input, const NoiseConfig &noise) {
    noise.validate();
    if (input.dim() != 2) {
        throw std::invalid_argument("heralded_output expects a single-qubit input");
    }
    DensityMatrix resource = DensityMatrix::from_pure(prepare_resource(oracle));
    if (noise.active() && noise.applied_to == NoiseTarget::Resource) {
        resource = depolarize_qubit(resource, 0, noise.depolarizing_p);
        resource = depolarize_qubit(resource, 1, noise.depolarizing_p);
    }
    ComplexMatrix joint = kron(input.matrix(), resource.matrix());
    joint = (joint + joint.adjoint()) * cplx{0.5};
    DensityMatrix out = bsm_project(DensityMatrix(std::move(joint)), BellOutcome(0, 0)).remnant;
    if (noise.active() && noise.applied_to == NoiseTarget::Output) {
        out = depolarize(out, noise.depolarizing_p);
    }
    return out;
}

Channel make_heralded_channel(const ComplexMatrix &hidden_unitary, const NoiseConfig &noise) {
    noise.validate();
    auto oracle = std::make_shared<UnitaryOracle>(hidden_unitary);
    return [oracle, noise](const DensityMatrix &rho) {
        return heralded_output(*oracle, rho, noise);
    };
}

Channel make_chi_channel(const ChiMatrix &chi) {
    return [chi](const DensityMatrix &rho) {
        return apply_channel(chi, rho);
    };
}

ChiMatrix choi_of_channel(const Channel &channel) {
    auto out = [&](Probe p) {
        return channel(DensityMatrix::from_pure(probe_state(p))).matrix();
    };
    ComplexMatrix e00 = out(Probe::H);
    ComplexMatrix e11 = out(Probe::V);
    ComplexMatrix e01 = out(Probe::D) + out(Probe::R) * cplx{0, 1} - (e00 + e11) * cplx{0.5, 0.5};
    ComplexMatrix e10 = e01.adjoint();
    const ComplexMatrix *blocks[2][2] = {{&e00, &e01}, {&e10, &e11}};

    // chi = (1/2) sum_{ij} |i><j| (x) E(|i><j|)
    ComplexMatrix chi(4, 4);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t b = 0; b < 2; b++) {
                for (size_t b2 = 0; b2 < 2; b2++) {
                    chi(2 * i + b, 2 * j + b2) = 0.5 * (*blocks[i][j])(b, b2);
                }
            }
        }
    }
    return ChiMatrix::normalized(chi);
}

}  // namespace undo
