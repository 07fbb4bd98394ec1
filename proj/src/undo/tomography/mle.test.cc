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

#include "gtest/gtest.h"

#include "test_util.h"
#include "undo/tomography/heralded_channel.h"

using namespace undo;
using namespace undo::testing;

namespace {

CountTable random_counts(Rng &rng, uint64_t max_shots) {
    CountTable t;
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        uint64_t shots = 1 + rng() % max_shots;
        uint64_t plus = rng() % (shots + 1);
        t.at(k) = {plus, shots - plus};
    }
    return t;
}

ChiMatrix inverse_choi(const ComplexMatrix &u) {
    return choi_of_unitary(unitary_inverse(u));
}

}  // namespace

TEST(mle, parameterization_is_physical) {
    Rng rng(70);
    for (int trial = 0; trial < 100; trial++) {
        MleParams p;
        for (auto &x : p) {
            x = uniform01(rng) * 2 - 1;
        }
        auto t = MleObjective::lower_triangular(p);
        for (size_t r = 0; r < 4; r++) {
            ASSERT_EQ(t(r, r).imag(), 0);
            for (size_t c = r + 1; c < 4; c++) {
                ASSERT_EQ(t(r, c), cplx(0));
            }
        }
        ASSERT_NO_THROW(ChiMatrix::normalized(MleObjective::chi_from_params(p)));
    }
}

TEST(mle, initial_point_is_nearly_maximally_mixed) {
    auto chi = ChiMatrix::normalized(MleObjective::chi_from_params(MleObjective::initial_params()));
    ASSERT_LT(chi.matrix().max_abs_diff(ComplexMatrix::identity(4) * cplx{0.25}), 0.02);
}

TEST(mle, gradient_matches_finite_differences) {
    Rng rng(71);
    for (int trial = 0; trial < 20; trial++) {
        MleObjective objective(random_counts(rng, 1000));
        MleParams p;
        for (auto &x : p) {
            x = uniform01(rng) * 2 - 1;
        }
        MleParams grad;
        double f = objective.value_and_gradient(p, grad);
        ASSERT_DOUBLE_EQ(f, objective.value(p));
        for (size_t k = 0; k < MLE_NUM_PARAMS; k++) {
            const double h = 1e-6;
            auto up = p;
            auto down = p;
            up[k] += h;
            down[k] -= h;
            double fd = (objective.value(up) - objective.value(down)) / (2 * h);
            ASSERT_NEAR(grad[k], fd, 1e-4 * std::max(1.0, std::abs(fd))) << "parameter " << k;
        }
    }
}

TEST(mle, likelihood_is_scale_invariant) {
    Rng rng(72);
    MleObjective objective(random_counts(rng, 100));
    auto p = MleObjective::initial_params();
    auto q = p;
    for (auto &x : q) {
        x *= 3;
    }
    ASSERT_NEAR(objective.value(p), objective.value(q), 1e-9 * std::abs(objective.value(p)));
}

TEST(mle, noiseless_inverse_u1_closed_loop) {
    auto counts = simulate_counts(make_heralded_channel(presets::U1(), NoiseConfig::none()), 100000, 1);
    auto result = mle_reconstruct(counts);
    ASSERT_TRUE(result.converged);
    ASSERT_GE(process_fidelity(result.chi, inverse_choi(presets::U1())), 0.999);
}

TEST(mle, identity_channel_recovers_phi_plus) {
    Channel identity = [](const DensityMatrix &rho) {
        return rho;
    };
    auto result = mle_reconstruct(simulate_counts(identity, 1000000, 2));
    ASSERT_GE(process_fidelity(result.chi, choi_of_unitary(gates::I())), 0.999);
}

TEST(mle, depolarized_inverse_u1_lands_on_calibrated_fidelity) {
    double p = 0.0311;
    auto counts = simulate_counts(make_heralded_channel(presets::U1(), {p, NoiseTarget::Output}), 100000, 3);
    auto result = mle_reconstruct(counts);
    ASSERT_NEAR(process_fidelity(result.chi, inverse_choi(presets::U1())), 0.9767, 0.008);
}

TEST(mle, nll_never_increases) {
    Rng rng(73);
    for (int trial = 0; trial < 10; trial++) {
        auto u = random_unitary(rng);
        auto counts = simulate_counts(make_heralded_channel(u, {0.1, NoiseTarget::Output}), 1000, trial);
        auto result = mle_reconstruct(counts);
        ASSERT_GE(result.nll_history.size(), 2u);
        for (size_t k = 1; k < result.nll_history.size(); k++) {
            ASSERT_LE(result.nll_history[k], result.nll_history[k - 1]);
        }
        ASSERT_EQ(result.nll_history.back(), result.nll);
    }
}

TEST(mle, arbitrary_counts_give_physical_chi) {
    Rng rng(74);
    for (int trial = 0; trial < 30; trial++) {
        auto counts = random_counts(rng, trial % 2 ? 5 : 5000);
        // ChiMatrix construction re-validates Hermiticity, trace and positivity.
        auto result = mle_reconstruct(counts);
        auto eig = hermitian_eigenvalues(result.chi.matrix());
        ASSERT_GE(eig.front(), -1e-8);
    }
}

TEST(mle, fidelity_improves_with_shots_on_average) {
    auto u = presets::U3();
    auto ideal = inverse_choi(u);
    auto channel = make_heralded_channel(u, NoiseConfig::none());
    double previous = 0;
    for (uint64_t shots : {100, 1000, 10000, 100000}) {
        double mean = 0;
        const int seeds = 8;
        for (int seed = 0; seed < seeds; seed++) {
            mean += process_fidelity(mle_reconstruct(simulate_counts(channel, shots, 100 + seed)).chi, ideal);
        }
        mean /= seeds;
        ASSERT_GE(mean, previous) << shots << " shots";
        previous = mean;
    }
}

TEST(mle, reconstructed_chi_is_close_to_trace_preserving) {
    auto counts = simulate_counts(make_heralded_channel(presets::U2(), {0.03, NoiseTarget::Output}), 100000, 5);
    auto result = mle_reconstruct(counts);
    ASSERT_TRUE(result.chi.is_trace_preserving(0.01));
}

TEST(mle, deterministic_given_counts) {
    auto counts = simulate_counts(make_heralded_channel(presets::U3(), {0.05, NoiseTarget::Output}), 2000, 6);
    auto a = mle_reconstruct(counts);
    auto b = mle_reconstruct(counts);
    ASSERT_EQ(a.chi.matrix().max_abs_diff(b.chi.matrix()), 0);
    ASSERT_EQ(a.iterations, b.iterations);
}

TEST(mle, non_convergence_is_reported) {
    auto counts = simulate_counts(make_heralded_channel(presets::U1(), NoiseConfig::none()), 100000, 7);
    try {
        mle_reconstruct(counts, {2, 1e-10, 8});
        FAIL() << "expected MleConvergenceError";
    } catch (const MleConvergenceError &e) {
        ASSERT_EQ(e.result().iterations, 2u);
        ASSERT_FALSE(e.result().converged);
        ASSERT_TRUE(std::isfinite(e.result().nll));
    }
}

TEST(mle, zero_shot_setting_is_rejected) {
    CountTable t;
    for (size_t k = 0; k < NUM_SETTINGS; k++) {
        t.at(k) = {5, 5};
    }
    t.at(3) = {0, 0};
    ASSERT_THROW(mle_reconstruct(t), std::invalid_argument);
}
