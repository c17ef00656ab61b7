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

#include "synlearn/faults/fault_model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "synlearn/faults/fault_io.h"
#include "synlearn/spacetime/generators.h"
#include "instances.h"

using namespace synlearn;

namespace {

// Brute-force subset expansion; independent of the dense convolution.
template <typename F>
void for_each_subset(const FaultModel &model, F &&f) {
    size_t K = model.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << K); mask++) {
        double w = 1;
        SpacetimePauli a(model.code().layout());
        for (size_t i = 0; i < K; i++) {
            double q = model.generators()[i].q;
            if ((mask >> i) & 1) {
                w *= q;
                a *= model.generators()[i].support;
            } else {
                w *= 1 - q;
            }
        }
        f(a, w);
    }
}

FaultModel small_model(double p) {
    return synlearn::testing::repetition_model(3, 1, p);
}

}  // namespace

TEST(fault_model, template_sizes) {
    EXPECT_EQ(synlearn::testing::repetition_model(3, 3, 1e-3).size(), 24u);
    EXPECT_EQ(synlearn::testing::surface_model(3, 1, 1e-3).size(), 116u);
    FaultModel rep = synlearn::testing::repetition_model(3, 3, 1e-3);
    for (const auto &g : rep.generators()) {
        EXPECT_TRUE(std::abs(g.q - 8e-4) < 1e-15 || std::abs(g.q - 1e-3) < 1e-15 || std::abs(g.q - 9e-4) < 1e-15)
            << g.label << " " << g.q;
    }
}

TEST(fault_model, eigenvalue_matches_subset_expansion) {
    FaultModel model = small_model(0.03);
    ASSERT_LE(model.size(), 16u);
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 20; rep++) {
        SpacetimePauli b = synlearn::testing::random_pauli(model.code().layout(), rng);
        double oracle = 0;
        for_each_subset(model, [&](const SpacetimePauli &a, double w) {
            oracle += anticommutes(a, b) ? -w : w;
        });
        EXPECT_NEAR(eigenvalue(model, b), oracle, 1e-13);
    }
}

TEST(fault_model, dense_distribution_matches_subset_expansion) {
    FaultModel model = small_model(0.05);
    DenseDistribution dense = error_rates_dense(model);
    double total = 0;
    for (double p : dense.probs) {
        EXPECT_GE(p, 0);
        total += p;
    }
    EXPECT_NEAR(total, 1, 1e-13);
    std::unordered_map<gf2::BitVec, double, gf2::BitVecHash> oracle;
    for_each_subset(model, [&](const SpacetimePauli &a, double w) {
        oracle[a.bits()] += w;
    });
    for (const auto &[bits, w] : oracle) {
        EXPECT_NEAR(dense.probability_of(SpacetimePauli(model.code().layout(), bits)), w, 1e-14);
    }
}

TEST(fault_model, effective_rate_full_order_sums_gauge_coset) {
    FaultModel model = small_model(0.04);
    const SpacetimeCode &code = model.code();
    SpacetimePauli target = model.generators()[2].support;
    double oracle = 0;
    for_each_subset(model, [&](const SpacetimePauli &a, double w) {
        if (code.in_gauge(a * target)) {
            oracle += w;
        }
    });
    EXPECT_NEAR(effective_rate(model, target, model.size()), oracle, 1e-14);
    // Truncation only drops nonnegative terms.
    double prev = 0;
    for (size_t order = 1; order <= 4; order++) {
        double r = effective_rate(model, target, order);
        EXPECT_GE(r + 1e-18, prev);
        prev = r;
    }
    EXPECT_THROW(effective_rate(model, target, 0), std::invalid_argument);
}

TEST(fault_model, prior_classes_combine_members) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 5e-4);
    PriorDistribution prior = build_prior(model);
    EXPECT_EQ(prior.size(), 19u);
    size_t members = 0;
    for (const PriorClass &c : prior.classes) {
        members += c.members.size();
        EXPECT_EQ(c.representative, c.members.front());
        double prod = 1;
        for (size_t m : c.members) {
            EXPECT_EQ(model.syndrome(m), c.syndrome);
            prod *= 1 - 2 * model.generators()[m].q;
        }
        EXPECT_NEAR(c.q, (1 - prod) / 2, 1e-16);
    }
    EXPECT_EQ(members, model.size());
    for (size_t i = 1; i < prior.size(); i++) {
        EXPECT_LT(prior.classes[i - 1].representative, prior.classes[i].representative);
    }
}

TEST(fault_model, construction_rejects_bad_generators) {
    FaultModel base = small_model(1e-3);
    auto gens = base.generators();
    auto dup = gens;
    dup.push_back(gens[0]);
    EXPECT_THROW(FaultModel(base.code_ptr(), dup), std::invalid_argument);
    auto ident = gens;
    ident.push_back({SpacetimePauli(base.code().layout()), 0.01, "id"});
    EXPECT_THROW(FaultModel(base.code_ptr(), ident), std::invalid_argument);
    EXPECT_THROW(base.with_coefficients(std::vector<double>(gens.size(), 0.5)), std::invalid_argument);
    FaultModel neg = base.with_coefficients(std::vector<double>(gens.size(), -0.01));
    EXPECT_FALSE(neg.sampleable());
    EXPECT_TRUE(base.sampleable());
}

TEST(fault_model, zero_syndrome_generator_blocks_prior) {
    FaultModel base = small_model(1e-3);
    auto gens = base.generators();
    gens.push_back({base.code().logical_gens()[0], 1e-3, "logical"});
    FaultModel model(base.code_ptr(), gens);
    EXPECT_THROW(build_prior(model), std::invalid_argument);
}

TEST(fault_io, json_round_trip_and_override) {
    FaultModel model = synlearn::testing::repetition_model(3, 3, 5e-4);
    FaultModel back = parse_fault_json(fault_model_to_json(model), model.code_ptr());
    ASSERT_EQ(back.size(), model.size());
    for (size_t i = 0; i < model.size(); i++) {
        EXPECT_EQ(back.generators()[i].support, model.generators()[i].support);
        EXPECT_DOUBLE_EQ(back.generators()[i].q, model.generators()[i].q);
    }
    auto code = model.code_ptr();
    FaultModel file = load_fault_model(synlearn::testing::data_path("faults/rep_d3_r3_bitflip.json"), code);
    EXPECT_EQ(file.size(), 24u);
    FaultModel twice = load_fault_model(synlearn::testing::data_path("faults/rep_d3_r3_bitflip.json"), code, 1e-3);
    for (size_t i = 0; i < file.size(); i++) {
        EXPECT_NEAR(twice.generators()[i].q, 2 * file.generators()[i].q, 1e-15);
    }
}

TEST(fault_io, entry_forms_are_equivalent) {
    auto code = synlearn::testing::shared_code(repetition_circuit(3, 1));
    FaultModel a = parse_fault_json(R"([{"pauli": "X1@t0X1@t1", "q": 0.002}])", code);
    FaultModel b = parse_fault_json(R"({"p": 0.001, "generators": [{"pauli": "X1@t0X1@t1", "scale": 2}]})", code);
    FaultModel c = parse_fault_json(R"([{"slices": {"0": "X1", "1": "X1"}, "q": 0.002}])", code);
    EXPECT_EQ(a.generators()[0].support, b.generators()[0].support);
    EXPECT_EQ(a.generators()[0].support, c.generators()[0].support);
    EXPECT_DOUBLE_EQ(b.generators()[0].q, 0.002);
    EXPECT_THROW(parse_fault_json(R"([{"pauli": "X1@t0"}])", code), std::invalid_argument);
}

TEST(fault_io, template_kinds) {
    EXPECT_EQ(parse_template_kind("bitflip"), TemplateKind::kBitflip);
    EXPECT_EQ(parse_template_kind("depolarize"), TemplateKind::kDepolarize);
    EXPECT_THROW(parse_template_kind("amplitude"), std::invalid_argument);
}
