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

#include "synlearn/sampler/sampler.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "synlearn/sampler/shot_io.h"
#include "synlearn/util/parallel.h"
#include "instances.h"

using namespace synlearn;

TEST(fault_sampler, marginals_and_pair_rates_match_q) {
    std::vector<double> q = {0.2, 0.05, 0.0, 0.2, 0.01};
    FaultSampler s(q);
    const uint64_t shots = 200000;
    std::vector<uint64_t> count(q.size(), 0);
    uint64_t both = 0;
    for (uint64_t shot = 0; shot < shots; shot++) {
        bool f0 = false;
        bool f1 = false;
        size_t last = SIZE_MAX;
        s.fire(5, shot, [&](size_t i) {
            EXPECT_TRUE(last == SIZE_MAX || i > last);
            last = i;
            count[i]++;
            f0 |= i == 0;
            f1 |= i == 1;
        });
        both += f0 && f1;
    }
    for (size_t i = 0; i < q.size(); i++) {
        double sd = std::sqrt(q[i] * (1 - q[i]) / shots);
        EXPECT_NEAR(double(count[i]) / shots, q[i], 5 * sd + 1e-12) << i;
    }
    double pq = q[0] * q[1];
    EXPECT_NEAR(double(both) / shots, pq, 5 * std::sqrt(pq / shots));
    EXPECT_THROW(FaultSampler({0.1, -0.1}), std::invalid_argument);
    EXPECT_THROW(FaultSampler({1.0}), std::invalid_argument);
}

TEST(shot_set, records_columns_and_concat) {
    ShotSet a(3, 70);
    a.set_record(69, gf2::BitVec::from_string("101"));
    EXPECT_TRUE(a.column(0)[69]);
    EXPECT_FALSE(a.column(1)[69]);
    EXPECT_EQ(a.record(69).to_string(), "101");
    ShotSet b(3, 5);
    b.set_record(0, gf2::BitVec::from_string("011"));
    ShotSet c = ShotSet::concat(a, b);
    EXPECT_EQ(c.num_shots(), 75u);
    EXPECT_EQ(c.record(69).to_string(), "101");
    EXPECT_EQ(c.record(70).to_string(), "011");
}

TEST(sampler, shots_are_identical_for_any_thread_count) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 0.01);
    size_t before = parallel::thread_count();
    parallel::set_thread_count(1);
    ShotSet one = sample_shots(model, 40000, 9);
    parallel::set_thread_count(7);
    ShotSet seven = sample_shots(model, 40000, 9);
    parallel::set_thread_count(before);
    EXPECT_EQ(one, seven);
    EXPECT_NE(one, sample_shots(model, 40000, 10));
    // A prefix of a longer run is the shorter run.
    ShotSet longer = sample_shots(model, 40001, 9);
    EXPECT_EQ(longer.record(39999), one.record(39999));
}

TEST(sampler, shot_outcomes_are_syndromes_of_fired_faults) {
    FaultModel model = synlearn::testing::repetition_model(3, 1, 0.05);
    const SpacetimeCode &code = model.code();
    ShotSet shots = sample_shots(model, 64, 3);
    std::vector<double> q;
    for (const auto &g : model.generators()) {
        q.push_back(g.q);
    }
    FaultSampler s(q);
    for (uint64_t shot = 0; shot < 64; shot++) {
        gf2::BitVec syn(code.num_meas());
        s.fire(3, shot, [&](size_t i) { syn ^= model.syndrome(i); });
        EXPECT_EQ(shots.record(shot), syn);
    }
}

TEST(sampler, estimated_eigenvalues_match_model) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 0.02);
    const SpacetimeCode &code = model.code();
    const size_t n = 200000;
    ShotSet shots = sample_shots(model, n, 17);
    std::vector<gf2::BitVec> mus;
    for (size_t i = 0; i < code.num_meas(); i++) {
        mus.push_back(gf2::BitVec::unit(code.num_meas(), i));
    }
    gf2::BitVec pair(code.num_meas());
    pair.set(0);
    pair.set(3);
    mus.push_back(pair);
    auto est = estimate_eigenvalues(shots, mus);
    for (size_t j = 0; j < mus.size(); j++) {
        double lambda = eigenvalue(model, meas_product(code, mus[j]));
        double sd = std::sqrt((1 - lambda * lambda) / n);
        EXPECT_NEAR(est[j].lambda_hat, lambda, 5 * sd);
        EXPECT_DOUBLE_EQ(est[j].bern_rate, (1 - est[j].lambda_hat) / 2);
        EXPECT_EQ(est[j].shots, n);
    }
    EXPECT_THROW(estimate_eigenvalue(shots, gf2::BitVec(code.num_meas() + 1)), std::invalid_argument);
}

TEST(sampler, meas_product_is_product_of_selected_generators) {
    SpacetimeCode code = build_spacetime_code(repetition_circuit(3, 3));
    gf2::BitVec mu(code.num_meas());
    mu.set(1);
    mu.set(4);
    EXPECT_EQ(meas_product(code, mu), code.meas_gens()[1] * code.meas_gens()[4]);
}

TEST(sampler, invalid_requests_throw) {
    FaultModel model = synlearn::testing::repetition_model(3, 1, 0.01);
    EXPECT_THROW(sample_shots(model, 0, 1), std::invalid_argument);
    FaultModel neg = model.with_coefficients(std::vector<double>(model.size(), -0.001));
    EXPECT_THROW(sample_shots(neg, 10, 1), std::invalid_argument);
}

TEST(shots_for_precision, closed_form_values) {
    EXPECT_EQ(shots_for_precision(0.01, 0.1, 0.05), 359488u);
    EXPECT_EQ(shots_for_precision(0.01, 0.2, 0.05), 89872u);
    EXPECT_THROW(shots_for_precision(0.5, 0.1, 0.05), std::domain_error);
    EXPECT_THROW(shots_for_precision(0.01, 0.0, 0.05), std::domain_error);
    EXPECT_THROW(shots_for_precision(0.01, 0.1, 1.0), std::domain_error);
}

TEST(shot_io, binary_round_trip_and_errors) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 0.05);
    ShotSet shots = sample_shots(model, 1003, 4);
    std::stringstream ss;
    write_shots_binary(ss, shots);
    EXPECT_EQ(read_shots_binary(ss), shots);

    std::stringstream bad("XXXXxxxxxxxxxxxxxxxx");
    EXPECT_THROW(read_shots_binary(bad), std::runtime_error);
    std::stringstream full;
    write_shots_binary(full, shots);
    std::string s = full.str();
    std::stringstream truncated(s.substr(0, s.size() - 1));
    EXPECT_THROW(read_shots_binary(truncated), std::runtime_error);
}

TEST(shot_io, csv_layout) {
    ShotSet shots(3, 2);
    shots.set_record(1, gf2::BitVec::from_string("110"));
    std::stringstream ss;
    write_shots_csv(ss, shots);
    EXPECT_EQ(ss.str(), "shot,bits\n0,000\n1,110\n");
}
