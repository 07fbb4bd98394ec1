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

#include "undo/tomography/mle.h"

#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace undo {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

double dot(const MleParams &a, const MleParams &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

/// Re Tr[a b] for Hermitian a, b.
double trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    double t = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            t += (a(r, c) * b(c, r)).real();
        }
    }
    return t;
}

double xlogy(double x, double y) {
    if (x == 0) {
        return 0;
    }
    return y > 0 ? x * std::log(y) : -INF;
}

}  // namespace

MleObjective::MleObjective(const CountTable &counts) {
    terms_.reserve(NUM_SETTINGS);
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        auto s = MeasurementSetting::from_index(k);
        const auto &c = counts[s];
        if (c.shots() == 0) {
            throw std::invalid_argument(
                "MLE: setting " + std::string(probe_name(s.probe)) + "/" + std::string(basis_name(s.basis)) +
                " has no shots");
        }
        ComplexMatrix rho_t = outer(probe_state(s.probe)).transpose() * cplx{2};
        terms_.push_back({
            kron(rho_t, projector(s.basis, true)),
            kron(rho_t, projector(s.basis, false)),
            static_cast<double>(c.n_plus),
            static_cast<double>(c.n_minus),
        });
    }
}

ComplexMatrix MleObjective::lower_triangular(const MleParams &params) {
    ComplexMatrix t(4, 4);
    size_t k = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < r; c++) {
            t(r, c) = cplx{params[k], params[k + 1]};
            k += 2;
        }
        t(r, r) = params[k++];
    }
    return t;
}

ComplexMatrix MleObjective::chi_from_params(const MleParams &params) {
    auto t = lower_triangular(params);
    return t.adjoint() * t;
}

MleParams MleObjective::initial_params() {
    MleParams p{};
    size_t k = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < r; c++) {
            p[k++] = 0.01 * static_cast<double>(r + c + 1) / 7;
            p[k++] = -0.01 * static_cast<double>(r * c + 1) / 11;
        }
        p[k++] = 0.5 + 0.01 * static_cast<double>(r) / 13;
    }
    return p;
}

double MleObjective::value(const MleParams &params) const {
    ComplexMatrix chi = chi_from_params(params);
    double nll = 0;
    for (const auto &term : terms_) {
        double a = trace_product(term.plus_op, chi);
        double b = trace_product(term.minus_op, chi);
        nll -= xlogy(term.n_plus, a) + xlogy(term.n_minus, b) - xlogy(term.n_plus + term.n_minus, a + b);
    }
    return std::isnan(nll) ? INF : nll;
}

double MleObjective::value_and_gradient(const MleParams &params, MleParams &gradient) const {
    ComplexMatrix t = lower_triangular(params);
    ComplexMatrix chi = t.adjoint() * t;
    double nll = 0;
    // dNLL = Tr[g dchi] with g Hermitian.
    ComplexMatrix g(4, 4);
    for (const auto &term : terms_) {
        double a = trace_product(term.plus_op, chi);
        double b = trace_product(term.minus_op, chi);
        double n = term.n_plus + term.n_minus;
        nll -= xlogy(term.n_plus, a) + xlogy(term.n_minus, b) - xlogy(n, a + b);
        double da = n / (a + b) - (term.n_plus > 0 ? term.n_plus / a : 0);
        double db = n / (a + b) - (term.n_minus > 0 ? term.n_minus / b : 0);
        g += term.plus_op * cplx{da} + term.minus_op * cplx{db};
    }
    // chi = T^dagger T gives dNLL = 2 Re sum_{kl} (g T^dagger)_{lk} dT_{kl}.
    ComplexMatrix w = g * t.adjoint();
    size_t k = 0;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < r; c++) {
            gradient[k++] = 2 * w(c, r).real();
            gradient[k++] = -2 * w(c, r).imag();
        }
        gradient[k++] = 2 * w(r, r).real();
    }
    if (std::isnan(nll)) {
        nll = INF;
    }
    return nll;
}

MleConvergenceError::MleConvergenceError(MleResult result)
    : std::runtime_error(
          "MLE did not converge after " + std::to_string(result.iterations) +
          " iterations (NLL = " + std::to_string(result.nll) + ")"),
      result_(std::move(result)) {
}

MleResult mle_reconstruct(const CountTable &counts, const MleOptions &options) {
    MleObjective objective(counts);
    MleParams x = MleObjective::initial_params();
    MleParams grad{};
    double f = objective.value_and_gradient(x, grad);
    if (!std::isfinite(f)) {
        throw std::invalid_argument("MLE: non-finite likelihood at the start point");
    }

    std::vector<double> history{f};
    struct Pair {
        MleParams s;
        MleParams y;
        double rho;
    };
    std::deque<Pair> memory;
    bool converged = false;
    size_t iter = 0;

    while (iter < options.max_iterations) {
        // Two-loop recursion for the L-BFGS direction.
        MleParams d = grad;
        std::vector<double> alphas(memory.size());
        for (size_t m = memory.size(); m-- > 0;) {
            alphas[m] = memory[m].rho * dot(memory[m].s, d);
            for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
                d[k] -= alphas[m] * memory[m].y[k];
            }
        }
        double gamma = 1;
        if (!memory.empty()) {
            const auto &last = memory.back();
            gamma = dot(last.s, last.y) / dot(last.y, last.y);
        } else {
            gamma = 1 / std::max(std::sqrt(dot(grad, grad)), 1e-300);
        }
        for (auto &v : d) {
            v *= gamma;
        }
        for (size_t m = 0; m < memory.size(); m++) {
            double beta = memory[m].rho * dot(memory[m].y, d);
            for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
                d[k] += memory[m].s[k] * (alphas[m] - beta);
            }
        }
        for (auto &v : d) {
            v = -v;
        }
        double slope = dot(grad, d);
        if (!(slope < 0)) {
            memory.clear();
            double scale = 1 / std::max(std::sqrt(dot(grad, grad)), 1e-300);
            for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
                d[k] = -grad[k] * scale;
            }
            slope = dot(grad, d);
        }

        // Backtracking line search with the Armijo condition.
        double step = 1;
        MleParams x_new{};
        MleParams grad_new{};
        double f_new = INF;
        bool accepted = false;
        for (int attempt = 0; attempt < 60; attempt++) {
            for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
                x_new[k] = x[k] + step * d[k];
            }
            f_new = objective.value_and_gradient(x_new, grad_new);
            if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (!memory.empty()) {
                memory.clear();
                continue;
            }
            // Steepest descent cannot improve at working precision.
            converged = true;
            break;
        }

        iter++;
        Pair pair{};
        for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
            pair.s[k] = x_new[k] - x[k];
            pair.y[k] = grad_new[k] - grad[k];
        }
        double sy = dot(pair.s, pair.y);
        if (sy > 1e-300) {
            pair.rho = 1 / sy;
            memory.push_back(pair);
            if (memory.size() > options.history) {
                memory.pop_front();
            }
        }

        double improvement = (f - f_new) / std::max(std::abs(f_new), 1.0);
        x = x_new;
        grad = grad_new;
        f = f_new;
        history.push_back(f);
        if (improvement < options.relative_tolerance) {
            converged = true;
            break;
        }
    }

    MleResult result{ChiMatrix::normalized(MleObjective::chi_from_params(x)), f, iter, converged, std::move(history)};
    if (!converged) {
        throw MleConvergenceError(std::move(result));
    }
    return result;
}

}  // namespace undo
