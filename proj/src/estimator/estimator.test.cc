// Copyright 2026 The synlearn Authors
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

#include "synlearn/estimator/estimator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "synlearn/spacetime/generators.h"
#include "instances.h"

using namespace synlearn;

namespace {

bool parity_and(const gf2::BitVec &a, const gf2::BitVec &b) {
    bool p = false;
    for (size_t i = 0; i < a.size(); i++) {
        p ^= a[i] && b[i];
    }
    return p;
}

}  // namespace

TEST(estimator, default_row_count) {
    EXPECT_EQ(default_q_rows(1), 17u);
    EXPECT_EQ(default_q_rows(5), 21u);
    EXPECT_EQ(default_q_rows(6), 24u);
    EXPECT_EQ(default_q_rows(19), 76u);
}

TEST(estimator, design_rows_and_matrix) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 5e-4);
    PriorDistribution prior = build_prior(model);
    SubsampleDesign d = draw_design(model.code(), prior, 60, 3);
    ASSERT_EQ(d.q(), 60u);
    ASSERT_EQ(d.num_classes(), prior.size());
    for (size_t i = 0; i < d.q(); i++) {
        EXPECT_TRUE(d.rows[i].any());
        for (size_t c = 0; c < prior.size(); c++) {
            EXPECT_EQ(d.A.at(i, c), parity_and(d.rows[i], prior.classes[c].syndrome) ? 1.0 : 0.0);
        }
    }
    // Row i depends only on (seed, i).
    SubsampleDesign shorter = draw_design(model.code(), prior, 40, 3);
    for (size_t i = 0; i < 40; i++) {
        EXPECT_EQ(shorter.rows[i], d.rows[i]);
    }
    EXPECT_NE(draw_design(model.code(), prior, 40, 4).rows, shorter.rows);
    EXPECT_THROW(draw_design(model.code(), prior, prior.size() - 1, 3), std::invalid_argument);

    linalg::RealMatrix s = signed_augmented(d);
    ASSERT_EQ(s.cols(), prior.size() + 1);
    for (size_t i = 0; i < d.q(); i++) {
        EXPECT_EQ(s.at(i, prior.size()), 1.0);
        EXPECT_EQ(s.at(i, 0), 2 * d.A.at(i, 0) - 1);
    }
}

TEST(estimator, design_matches_measured_eigenvalues) {
    // Row eigenvalues computed from the model agree with the design targets.
    FaultModel model = synlearn::testing::repetition_model(3, 3, 0.01);
    PriorDistribution prior = build_prior(model);
    SubsampleDesign d = draw_design(model.code(), prior, 50, 8);
    std::vector<double> y = exact_targets(d, prior);
    for (size_t i = 0; i < d.q(); i++) {
        double lambda = eigenvalue(model, meas_product(model.code(), d.rows[i]));
        EXPECT_NEAR(y[i], -std::log(lambda), 1e-12);
    }
}

TEST(estimator, full_design_is_isometric) {
    FaultModel model = synlearn::testing::repetition_model(3, 1, 1e-3);
    PriorDistribution prior = build_prior(model);
    SubsampleDesign d = full_design(model.code(), prior);
    EXPECT_TRUE(d.full);
    EXPECT_EQ(d.q(), size_t{1} << model.code().num_meas());
    EXPECT_NEAR(rip_constant(d), 0.0, 1e-12);
}

TEST(estimator, noiseless_recovery_is_exact) {
    for (const FaultModel &model : {synlearn::testing::repetition_model(3, 3, 5e-4), synlearn::testing::repetition_model(5, 5, 1e-3),
                                    synlearn::testing::surface_model(3, 1, 5e-4)}) {
        PriorDistribution prior = build_prior(model);
        SubsampleDesign d = draw_design(model.code(), prior, 8 * prior.size(), 21);
        RecoveryResult r = recover(d, exact_targets(d, prior));
        ASSERT_EQ(r.q_bar.size(), prior.size());
        for (size_t c = 0; c < prior.size(); c++) {
            EXPECT_NEAR(r.q_bar[c], prior.classes[c].q, 1e-10);
            EXPECT_NEAR(r.x_bar[c], -std::log(1 - 2 * r.q_bar[c]), 1e-12);
        }
        EXPECT_LT(r.residual, 1e-9);
        EXPECT_FALSE(r.tainted());
        double sum = 0;
        for (double x : r.x_bar) {
            sum += x;
        }
        EXPECT_NEAR(r.s_hat, sum, 1e-9);
    }
}

TEST(estimator, single_class_model) {
    auto code = synlearn::testing::shared_code(repetition_circuit(3, 1));
    FaultModel base = synlearn::testing::repetition_model(3, 1, 1e-3);
    FaultModel model(code, {base.generators()[1]});
    PriorDistribution prior = build_prior(model);
    ASSERT_EQ(prior.size(), 1u);
    SubsampleDesign d = draw_design(model.code(), prior, default_q_rows(1), 2);
    RecoveryResult r = recover(d, exact_targets(d, prior));
    EXPECT_NEAR(r.q_bar[0], base.generators()[1].q, 1e-12);
}

TEST(estimator, delta_hat_below_one_at_eight_rows_per_class) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 5e-4);
    PriorDistribution prior = build_prior(model);
    size_t full_rank_at_4k = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        SubsampleDesign d8 = draw_design(model.code(), prior, 8 * prior.size(), 1000 + seed);
        EXPECT_LT(rip_constant(d8), 1.0) << "seed " << seed;
        SubsampleDesign d4 = draw_design(model.code(), prior, default_q_rows(prior.size()), 1000 + seed);
        full_rank_at_4k += linalg::numerical_rank(signed_augmented(d4)) == prior.size() + 1;
    }
    EXPECT_GE(full_rank_at_4k, 99u);
}

TEST(estimator, noisy_recovery_respects_bound) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 5e-4);
    PriorDistribution prior = build_prior(model);
    const double eps = 1e-4;
    for (uint64_t seed = 0; seed < 20; seed++) {
        // 16K rows keep delta_hat well below 1 so the bound is never vacuous.
        SubsampleDesign d = draw_design(model.code(), prior, 16 * prior.size(), 50 + seed);
        std::vector<double> y = exact_targets(d, prior);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-eps, eps);
        for (double &v : y) {
            v += u(rng);
        }
        RecoveryResult r = recover(d, y);
        ASSERT_LT(r.delta_hat, 1.0);
        EXPECT_NEAR(r.delta_hat, rip_constant(d), 1e-12);
        double bound = std::sqrt(1 + r.delta_hat) / (1 - r.delta_hat) * eps;
        for (size_t c = 0; c < prior.size(); c++) {
            EXPECT_LE(std::abs(r.q_bar[c] - prior.classes[c].q), bound);
        }
    }
}

TEST(estimator, log_targets_clamp_and_reject) {
    std::vector<EigenvalueEstimate> est(3);
    est[0].lambda_hat = 0.5;
    est[1].lambda_hat = -0.1;
    est[2].lambda_hat = 1.0;
    EXPECT_THROW(log_targets(est, std::nullopt, nullptr), std::domain_error);
    std::vector<size_t> clamped;
    std::vector<double> y = log_targets(est, 1e-3, &clamped);
    EXPECT_NEAR(y[0], std::log(2.0), 1e-15);
    EXPECT_NEAR(y[1], -std::log(1e-3), 1e-12);
    EXPECT_EQ(y[2], 0.0);
    EXPECT_EQ(clamped, std::vector<size_t>{1});
}

TEST(estimator, recover_rejects_bad_targets) {
    FaultModel model = synlearn::testing::repetition_model(3, 1, 1e-3);
    PriorDistribution prior = build_prior(model);
    SubsampleDesign d = draw_design(model.code(), prior, 40, 1);
    std::vector<double> y = exact_targets(d, prior);
    y[3] = std::nan("");
    EXPECT_THROW(recover(d, y), std::invalid_argument);
    y.pop_back();
    EXPECT_THROW(recover(d, y), std::invalid_argument);
}

TEST(estimator, logical_eigenvalue_matches_model) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 2e-3);
    PriorDistribution prior = build_prior(model);
    SubsampleDesign d = draw_design(model.code(), prior, 8 * prior.size(), 5);
    RecoveryResult r = recover(d, exact_targets(d, prior));
    for (const auto &l : model.code().logical_gens()) {
        std::vector<uint8_t> pattern;
        for (const PriorClass &c : prior.classes) {
            pattern.push_back(anticommutes(l, model.generators()[c.representative].support));
        }
        LogicalEigenvalue le = reconstruct_logical_eigenvalue(d, r, pattern, 0.0);
        EXPECT_NEAR(le.lambda, eigenvalue(model, l), 1e-10);
        EXPECT_EQ(le.log_bound, 0.0);
        pattern.push_back(0);
        EXPECT_THROW(reconstruct_logical_eigenvalue(d, r, pattern, 0.0), std::invalid_argument);
    }
}
