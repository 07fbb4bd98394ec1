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

#ifndef UNDO_CLI_COMMANDS_H
#define UNDO_CLI_COMMANDS_H

#include <array>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "undo/cli/config.h"
#include "undo/tomography/choi.h"
#include "undo/tomography/counts.h"
#include "undo/tomography/mle.h"

namespace undo {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_USAGE = 1;
inline constexpr int EXIT_NUMERICAL = 2;

inline constexpr int REPORT_SCHEMA_VERSION = 1;

/// Target average fidelity used to calibrate noise in reproduce-paper, and
/// the per-unitary reference values printed next to the simulated ones.
inline constexpr double REFERENCE_AVERAGE_FIDELITY = 0.9767;
inline constexpr std::array<double, 3> REFERENCE_FIDELITIES = {0.9778, 0.9772, 0.9752};

/// Round cap for invert. (3/4)^1000 is far below one in any feasible run.
inline constexpr size_t CLI_MAX_ROUNDS = 1000;

/// 16 [re, im] pairs, row-major.
nlohmann::json chi_to_json(const ComplexMatrix &chi);
/// Inverse of chi_to_json; the result passes the ChiMatrix checks or throws.
ChiMatrix chi_from_json(const nlohmann::json &doc);

/// Calls fn(0), ..., fn(n - 1) on up to `jobs` threads. Rethrows the
/// exception of the lowest failing index.
void parallel_for(size_t n, size_t jobs, const std::function<void(size_t)> &fn);

/// Runs config.trials seeded inversions (trial t draws from
/// substream(seed, t)) and summarizes rounds, queries, Bell outcomes and
/// output fidelity. Results do not depend on config.jobs.
nlohmann::json cmd_invert(const RunConfig &config);

struct TomographyRun {
    CountTable counts;
    MleResult mle;
    ChiMatrix ideal;
    double fidelity = 0;
    nlohmann::json report;
    std::string svg_real;
    std::string svg_imag;
};

/// Simulated counts, MLE reconstruction and fidelity against the Choi
/// matrix of U^{-1}. Throws MleConvergenceError on non-convergence.
TomographyRun run_tomography(
    const ComplexMatrix &unitary, const std::string &label, uint64_t shots, uint64_t seed, const NoiseConfig &noise);

TomographyRun cmd_tomography(const RunConfig &config);

struct CalibratedRun {
    std::vector<TomographyRun> runs;
    double average_fidelity = 0;
    NoiseConfig noise;
    nlohmann::json summary;
    /// Human-readable comparison table.
    std::string table;
};

/// Tomography of U1, U2 and U3 with depolarizing noise calibrated to the
/// reference average fidelity, unless config.noise_disabled. Resource noise
/// is calibrated so that its two depolarizers compose to the same strength.
CalibratedRun cmd_reproduce(const RunConfig &config);

/// Writes report.json, counts.tsv, chi_real.svg and chi_imag.svg into dir.
void write_tomography_artifacts(const TomographyRun &run, const std::string &dir);
/// Writes one subdirectory per unitary plus summary.json and summary.txt.
void write_calibrated_artifacts(const CalibratedRun &run, const std::string &dir);

/// Full command-line entry point. Returns an EXIT_* code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace undo

#endif
