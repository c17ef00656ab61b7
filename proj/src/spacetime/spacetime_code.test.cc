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

#include "synlearn/spacetime/spacetime_code.h"

#include <gtest/gtest.h>

#include <random>

#include "synlearn/spacetime/circuit_io.h"
#include "synlearn/spacetime/generators.h"
#include "instances.h"

using namespace synlearn;

namespace {

struct Golden {
    const char *file;
    size_t gauge_rank;
    size_t M;
    size_t k;
};

}  // namespace

TEST(spacetime_code, golden_dimensions_of_bundled_circuits) {
    const Golden table[] = {
        {"rep_d3_r1", 12, 4, 1},
        {"rep_d3_r3", 32, 8, 1},
        {"rep_d5_r5", 84, 24, 1},
        {"bacon_shor_2x2", 16, 6, 1},
        {"bacon_shor_3x3", 72, 16, 1},
        {"surface_d3_r1", 72, 16, 1},
    };
    for (const Golden &g : table) {
        SCOPED_TRACE(g.file);
        CircuitSpec c = load_circuit(synlearn::testing::data_path(std::string("circuits/") + g.file + ".json"));
        SpacetimeCode code = build_spacetime_code(c);
        const CodeDims &d = code.dims();
        EXPECT_EQ(d.total_bits, 2 * c.n * (c.T + 1));
        EXPECT_EQ(d.gauge_rank, g.gauge_rank);
        EXPECT_EQ(d.M, g.M);
        EXPECT_EQ(d.k, g.k);
        // |G| |G^perp| = total and G^perp = M x L.
        EXPECT_EQ(d.gauge_rank + d.gauge_perp_dim, d.total_bits);
        EXPECT_EQ(d.gauge_perp_dim, d.M + d.logical_count);
        EXPECT_EQ(code.meas_gens().size(), d.M);
        EXPECT_EQ(code.logical_gens().size(), d.logical_count);
    }
}

TEST(spacetime_code, bacon_shor_measurement_group_needs_completion) {
    SpacetimeCode code = build_spacetime_code(bacon_shor_circuit(2));
    EXPECT_EQ(code.dims().meas_candidates_raw, 6u);
    EXPECT_EQ(code.dims().meas_candidates_kept, 4u);
    EXPECT_EQ(code.dims().meas_completed, 2u);
    EXPECT_EQ(code.dims().logical_count, 2u);
}

TEST(spacetime_code, propagation_is_adjoint) {
    std::mt19937_64 rng(51);
    for (const CircuitSpec &c : {rotated_surface_circuit(3, 1), bacon_shor_circuit(3)}) {
        for (int rep = 0; rep < 100; rep++) {
            SpacetimePauli a = synlearn::testing::random_pauli(c.layout(), rng);
            SpacetimePauli b = synlearn::testing::random_pauli(c.layout(), rng);
            EXPECT_EQ(anticommutes(propagate_forward(c, a), b), anticommutes(a, propagate_backward(c, b)));
        }
    }
}

TEST(spacetime_code, forward_of_single_slice_is_transport) {
    CircuitSpec c = rotated_surface_circuit(3, 1);
    PauliString p = PauliString::parse("X1Z5", c.n);
    SpacetimePauli a = SpacetimePauli::on_slice(c.layout(), 1, p);
    SpacetimePauli f = propagate_forward(c, a);
    for (size_t t = 0; t <= c.T; t++) {
        PauliString expect = t < 1 ? PauliString(c.n) : c.propagator(t, 1).apply(p);
        EXPECT_EQ(f.slice(t), expect);
    }
    EXPECT_EQ(terminal_frame(c, a), c.propagator(c.T, 1).apply(p));
}

TEST(spacetime_code, measurement_group_is_central) {
    for (const CircuitSpec &c : {repetition_circuit(3, 3), rotated_surface_circuit(3, 1), bacon_shor_circuit(3)}) {
        SpacetimeCode code = build_spacetime_code(c);
        for (const auto &m : code.meas_gens()) {
            EXPECT_TRUE(code.in_gauge(m));
            EXPECT_TRUE(code.in_gauge_perp(m));
            EXPECT_TRUE(code.logical_signature(m).none());
        }
        for (const auto &g : code.gauge_gens()) {
            EXPECT_TRUE(code.syndrome(g).none());
        }
    }
}

TEST(spacetime_code, logicals_are_dressed_and_paired) {
    for (const CircuitSpec &c : {repetition_circuit(3, 3), rotated_surface_circuit(3, 1), bacon_shor_circuit(2)}) {
        SpacetimeCode code = build_spacetime_code(c);
        const auto &L = code.logical_gens();
        for (size_t i = 0; i < L.size(); i++) {
            EXPECT_TRUE(code.in_gauge_perp(L[i]));
            EXPECT_FALSE(code.in_gauge(L[i]));
            EXPECT_TRUE(code.syndrome(L[i]).none());
            // Signature of a logical generator is its anticommutation row.
            gf2::BitVec sig = code.logical_signature(L[i]);
            for (size_t j = 0; j < L.size(); j++) {
                EXPECT_EQ(sig[j], anticommutes(L[i], L[j]));
            }
        }
    }
}

TEST(spacetime_code, transports_are_gauge_and_leave_no_frame) {
    CircuitSpec c = rotated_surface_circuit(3, 1);
    SpacetimeCode code = build_spacetime_code(c);
    std::mt19937_64 rng(52);
    for (size_t t = 0; t < c.T; t++) {
        // Only Paulis commuting with the step's checks are transported freely.
        PauliString p(c.n);
        bool commutes = false;
        while (!commutes) {
            for (size_t q = 0; q < c.n; q++) {
                p.set(q, rng() & 1, rng() & 1);
            }
            commutes = true;
            for (const auto &chk : c.checks[t]) {
                commutes &= p.commutes_with(chk);
            }
        }
        SpacetimePauli g = pauli_transport(c, p, t);
        EXPECT_TRUE(code.in_gauge(g));
        EXPECT_TRUE(terminal_frame(c, g).is_identity());
    }
}

TEST(spacetime_code, syndrome_is_linear) {
    SpacetimeCode code = build_spacetime_code(rotated_surface_circuit(3, 1));
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 50; rep++) {
        SpacetimePauli a = synlearn::testing::random_pauli(code.layout(), rng);
        SpacetimePauli b = synlearn::testing::random_pauli(code.layout(), rng);
        EXPECT_EQ(code.syndrome(a * b), code.syndrome(a) ^ code.syndrome(b));
        EXPECT_EQ(code.logical_signature(a * b), code.logical_signature(a) ^ code.logical_signature(b));
        EXPECT_EQ(code.syndrome(a), syndrome_of(code, a));
    }
}

TEST(spacetime_code, user_logical_outside_normalizer_throws) {
    CircuitSpec c = repetition_circuit(3, 1);
    c.logicals = {PauliString::parse("X1", 3)};
    EXPECT_THROW(build_spacetime_code(c), std::invalid_argument);
}
