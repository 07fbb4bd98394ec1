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

#ifndef UNDO_CLI_CONFIG_H
#define UNDO_CLI_CONFIG_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "undo/noise/noise.h"
#include "undo/qmath/unitary.h"
#include "undo/rng.h"

namespace undo {

/// Bad user input. The message starts with the offending flag.
class UsageError : public std::invalid_argument {
   public:
    UsageError(std::string_view field, std::string_view problem);
    const std::string &field() const { return field_; }

   private:
    std::string field_;
};

/// Flag values as typed, before validation.
struct RawOptions {
    std::string unitary = "U1";
    bool haar = false;
    int64_t shots = 100000;
    int64_t trials = 100000;
    uint64_t seed = 42;
    double noise_p = 0;
    std::string noise_target = "output";
    int64_t jobs = 1;
    std::string out;
    bool no_noise = false;
    bool force_success = false;
};

struct RunConfig {
    /// The --unitary text, echoed into reports.
    std::string unitary_label;
    ComplexMatrix unitary;
    uint64_t shots = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    NoiseConfig noise;
    /// True when --no-noise was given; overrides --noise-p and calibration.
    bool noise_disabled = false;
    size_t jobs = 1;
    std::string output_dir;
    bool force_success = false;
};

/// Validates every field. Throws UsageError naming the flag.
RunConfig build_config(const RawOptions &raw);

/// theta uniform on [0, pi/2] and phases uniform on [0, 2 pi). With haar set,
/// theta = arcsin(sqrt(u)) instead, which makes the template Haar-distributed
/// up to global phase.
UnitaryParams sample_unitary_params(Rng &rng, bool haar);

/// Accepts a preset name (U1, U2, U3), "random", "theta,phi1,phi2", or the
/// path of a JSON file holding either {"theta": .., "phi1": .., "phi2": ..}
/// or [[[re, im], [re, im]], [[re, im], [re, im]]]. File matrices within 1e-6
/// of unitary are projected onto the nearest unitary. "random" draws from a
/// stream derived from seed. Throws UsageError("--unitary", ..).
ComplexMatrix resolve_unitary(std::string_view text, uint64_t seed, bool haar);

/// Closest unitary in Frobenius norm: M (M^dagger M)^{-1/2}.
ComplexMatrix nearest_unitary(const ComplexMatrix &m);

}  // namespace undo

#endif
