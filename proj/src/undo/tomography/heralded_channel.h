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

#ifndef UNDO_TOMOGRAPHY_HERALDED_CHANNEL_H
#define UNDO_TOMOGRAPHY_HERALDED_CHANNEL_H

#include "undo/noise/noise.h"
#include "undo/protocol/protocol.h"
#include "undo/tomography/choi.h"
#include "undo/tomography/counts.h"

namespace undo {

/// One heralded round of the inversion protocol on a mixed input: prepare the
/// resource (one query), optionally depolarize both resource qubits, measure,
/// keep the (0, 0) branch, optionally depolarize the output.
DensityMatrix heralded_output(UnitaryOracle &oracle, const DensityMatrix &input, const NoiseConfig &noise);

/// The channel under test for tomography. Owns its oracle.
Channel make_heralded_channel(const ComplexMatrix &hidden_unitary, const NoiseConfig &noise);

/// A channel that applies a fixed chi (see apply_channel).
Channel make_chi_channel(const ChiMatrix &chi);

/// Exact Choi matrix of a linear channel from its outputs on H, V, D and R,
/// using |0><1| = |D><D| + i|R><R| - (1 + i)(|H><H| + |V><V|)/2.
ChiMatrix choi_of_channel(const Channel &channel);

}  // namespace undo

#endif
