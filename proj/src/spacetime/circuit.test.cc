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

#include "synlearn/spacetime/circuit.h"

#include <gtest/gtest.h>

#include <random>

#include "synlearn/spacetime/circuit_io.h"
#include "synlearn/spacetime/generators.h"
#include "instances.h"

using namespace synlearn;

namespace {

CliffordLayer random_clifford(size_t n, std::mt19937_64 &rng, size_t gates) {
    CliffordLayer c = CliffordLayer::identity(n);
    for (size_t i = 0; i < gates; i++) {
        size_t a = rng() % n;
        size_t b = (a + 1 + rng() % (n - 1)) % n;
        switch (rng() % 4) {
            case 0:
                c.cnot(a, b);
                break;
            case 1:
                c.h(a);
                break;
            case 2:
                c.s(a);
                break;
            default:
                c.swap(a, b);
        }
    }
    return c;
}

}  // namespace

TEST(clifford, gate_conjugation_tables) {
    CliffordLayer c = CliffordLayer::identity(2);
    c.cnot(0, 1);
    EXPECT_EQ(c.apply(PauliString::parse("X1", 2)).to_string(), "X1X2");
    EXPECT_EQ(c.apply(PauliString::parse("Z2", 2)).to_string(), "Z1Z2");
    EXPECT_EQ(c.apply(PauliString::parse("Z1", 2)).to_string(), "Z1");
    EXPECT_EQ(c.apply(PauliString::parse("X2", 2)).to_string(), "X2");

    CliffordLayer h = CliffordLayer::identity(1);
    h.h(0);
    EXPECT_EQ(h.apply(PauliString::parse("X1", 1)).to_string(), "Z1");
    EXPECT_EQ(h.apply(PauliString::parse("Y1", 1)).to_string(), "Y1");

    CliffordLayer s = CliffordLayer::identity(1);
    s.s(0);
    EXPECT_EQ(s.apply(PauliString::parse("X1", 1)).to_string(), "Y1");
    EXPECT_EQ(s.apply(PauliString::parse("Z1", 1)).to_string(), "Z1");
}

TEST(clifford, random_layers_are_symplectic_and_invertible) {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 50; rep++) {
        size_t n = 2 + rng() % 5;
        CliffordLayer c = random_clifford(n, rng, 20);
        EXPECT_TRUE(is_symplectic(c.symp()));
        EXPECT_TRUE(c.then(c.inverse()).is_identity());
        EXPECT_TRUE(c.inverse().then(c).is_identity());
        // Conjugation preserves commutation.
        PauliString a(n);
        PauliString b(n);
        for (size_t q = 0; q < n; q++) {
            a.set(q, rng() & 1, rng() & 1);
            b.set(q, rng() & 1, rng() & 1);
        }
        EXPECT_EQ(c.apply(a).commutes_with(c.apply(b)), a.commutes_with(b));
    }
}

TEST(clifford, non_symplectic_matrix_is_rejected) {
    gf2::BitMatrix m(4, 4);
    m.set(0, 0);
    EXPECT_THROW(CliffordLayer(2, m), std::invalid_argument);
}

TEST(circuit, then_composes_in_order) {
    std::mt19937_64 rng(42);
    CliffordLayer a = random_clifford(4, rng, 10);
    CliffordLayer b = random_clifford(4, rng, 10);
    PauliString p = PauliString::parse("X1Z3Y4", 4);
    EXPECT_EQ(a.then(b).apply(p), b.apply(a.apply(p)));
}

TEST(circuit, propagator_chains_layers) {
    CircuitSpec c = rotated_surface_circuit(3, 1);
    std::mt19937_64 rng(43);
    for (size_t t0 = 0; t0 <= c.T; t0++) {
        EXPECT_TRUE(c.propagator(t0, t0).is_identity());
        for (size_t t1 = t0; t1 + 1 <= c.T; t1++) {
            EXPECT_EQ(c.propagator(t1 + 1, t0), c.propagator(t1, t0).then(c.layers[t1]));
        }
    }
}

TEST(circuit, generated_circuits_validate) {
    EXPECT_NO_THROW(repetition_circuit(3, 3).validate());
    EXPECT_NO_THROW(repetition_circuit(7, 2).validate());
    EXPECT_NO_THROW(rotated_surface_circuit(3, 2).validate());
    EXPECT_NO_THROW(bacon_shor_circuit(3).validate());
    EXPECT_EQ(repetition_circuit(5, 4).T, 8u);
    EXPECT_EQ(bacon_shor_circuit(3).T, 4u);
}

TEST(circuit, validate_rejects_anticommuting_checks) {
    CircuitSpec c = repetition_circuit(3, 1);
    c.checks[0].push_back(PauliString::parse("X2", 3));
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(circuit, validate_rejects_odd_T) {
    CircuitSpec c = repetition_circuit(3, 1);
    c.T = 3;
    c.layers.push_back(CliffordLayer::identity(3));
    c.checks.emplace_back();
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(circuit_io, json_round_trip) {
    for (const CircuitSpec &c : {repetition_circuit(3, 3), rotated_surface_circuit(3, 1), bacon_shor_circuit(2)}) {
        CircuitSpec back = parse_circuit_json(circuit_to_json(c));
        EXPECT_EQ(back, c);
    }
}

TEST(circuit_io, bundled_files_load) {
    CircuitSpec c = load_circuit(synlearn::testing::data_path("circuits/rep_d3_r3.json"));
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.T, 6u);
    EXPECT_THROW(load_circuit(synlearn::testing::data_path("circuits/missing.json")), std::runtime_error);
}

TEST(circuit_io, gate_layers_match_builders) {
    const char *text = R"({
  "n": 2, "T": 2,
  "layers": [{"gates": [["CX", 1, 2]]}, "identity"],
  "base_stabilizers": ["Z1"]
})";
    CircuitSpec c = parse_circuit_json(text);
    CliffordLayer expect = CliffordLayer::identity(2);
    expect.cnot(0, 1);
    EXPECT_EQ(c.layers[0], expect);
    EXPECT_TRUE(c.layers[1].is_identity());
}

TEST(circuit_io, errors_name_source_and_line) {
    const char *text = R"({
  "n": 3, "T": 2,
  "layers": "identity",
  "checks": [{"t": 0, "generators": ["Z1Z2"]},
             {"t": 1, "generators": ["Z2Q3"]}],
  "base_stabilizers": ["Z1Z2", "Z2Z3"]
})";
    try {
        parse_circuit_json(text, "bad.json");
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("bad.json:5"), std::string::npos) << msg;
    }
    EXPECT_THROW(parse_circuit_json("{\"n\": 3}", "x"), std::invalid_argument);
    EXPECT_THROW(parse_circuit_json("not json", "x"), std::invalid_argument);
}
