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

#ifndef UNDO_TOMOGRAPHY_MLE_H
#define UNDO_TOMOGRAPHY_MLE_H

#include <array>
#include <stdexcept>
#include <vector>

#include "undo/tomography/choi.h"
#include "undo/tomography/counts.h"

namespace undo {

/// chi is parameterized as T^dagger T with T lower triangular: 4 real
/// diagonal entries plus 6 complex sub-diagonal entries.
inline constexpr size_t MLE_NUM_PARAMS = 16;
using MleParams = std::array<double, MLE_NUM_PARAMS>;

/// Negative log-likelihood of a count table as a function of T.
///
/// Each setting is an independent binomial. The predicted plus-probability
/// is a / (a + b) with a = Tr[(2 rho_probe^T (x) Pi_plus) chi] and b the same
/// for Pi_minus; for trace-preserving chi, a + b = 1. The NLL is invariant
/// under rescaling chi, so chi = T^dagger T needs no trace constraint.
class MleObjective {
   public:
    /// Throws if any setting has zero shots.
    explicit MleObjective(const CountTable &counts);

    static ComplexMatrix lower_triangular(const MleParams &params);
    /// T^dagger T, not trace normalized.
    static ComplexMatrix chi_from_params(const MleParams &params);
    /// I/4 (after normalization) plus a fixed small perturbation.
    static MleParams initial_params();

    /// +infinity where a nonzero count meets a zero prediction.
    double value(const MleParams &params) const;
    double value_and_gradient(const MleParams &params, MleParams &gradient) const;

   private:
    struct Term {
        ComplexMatrix plus_op;
        ComplexMatrix minus_op;
        double n_plus;
        double n_minus;
    };
    std::vector<Term> terms_;
};

struct MleOptions {
    size_t max_iterations = 5000;
    /// Stop once (NLL_prev - NLL) / max(|NLL|, 1) drops below this.
    double relative_tolerance = 1e-10;
    /// L-BFGS memory.
    size_t history = 8;
};

struct MleResult {
    ChiMatrix chi;
    double nll = 0;
    size_t iterations = 0;
    bool converged = false;
    /// NLL at the initial point and after every accepted step.
    std::vector<double> nll_history;
};

class MleConvergenceError : public std::runtime_error {
   public:
    explicit MleConvergenceError(MleResult result);
    const MleResult &result() const { return result_; }

   private:
    MleResult result_;
};

/// Maximum-likelihood chi for a count table, by L-BFGS with a backtracking
/// (Armijo) line search. Deterministic: the start point and schedule do not
/// depend on the data. Throws MleConvergenceError if max_iterations pass
/// without meeting the tolerance.
MleResult mle_reconstruct(const CountTable &counts, const MleOptions &options = {});

}  // namespace undo

#endif
