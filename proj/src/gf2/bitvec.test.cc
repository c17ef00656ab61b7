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

#include "synlearn/gf2/bitvec.h"

#include <gtest/gtest.h>

#include <random>

using namespace synlearn::gf2;

namespace {

BitVec random_vec(std::mt19937_64 &rng, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

}  // namespace

TEST(bitvec, string_round_trip_and_errors) {
    BitVec v = BitVec::from_string("0110001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.to_string(), "0110001");
    EXPECT_TRUE(v[1]);
    EXPECT_FALSE(v[0]);
    EXPECT_THROW(BitVec::from_string("01x"), std::invalid_argument);
    EXPECT_EQ(BitVec::unit(5, 3).to_string(), "00010");
}

TEST(bitvec, set_flip_clear_across_word_boundary) {
    BitVec v(130);
    v.set(63);
    v.set(64);
    v.flip(129);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.ones(), (std::vector<size_t>{63, 64, 129}));
    EXPECT_EQ(v.first_set(), 63u);
    v.set(63, false);
    EXPECT_EQ(v.first_set(), 64u);
    v.clear();
    EXPECT_TRUE(v.none());
    EXPECT_FALSE(v.first_set().has_value());
}

TEST(bitvec, xor_and_match_elementwise_oracle) {
    std::mt19937_64 rng(1);
    for (size_t n : {1, 63, 64, 65, 200}) {
        BitVec a = random_vec(rng, n);
        BitVec b = random_vec(rng, n);
        BitVec x = a ^ b;
        BitVec y = a & b;
        size_t pc = 0;
        bool par = false;
        for (size_t i = 0; i < n; i++) {
            EXPECT_EQ(x[i], a[i] != b[i]);
            EXPECT_EQ(y[i], a[i] && b[i]);
            pc += a[i];
            par ^= a[i] && b[i];
        }
        EXPECT_EQ(a.popcount(), pc);
        EXPECT_EQ(dot(a, b), par);
    }
}

TEST(bitvec, length_mismatch_throws) {
    BitVec a(5);
    BitVec b(6);
    EXPECT_THROW(a ^= b, std::invalid_argument);
    EXPECT_THROW(dot(a, b), std::invalid_argument);
}

TEST(bitvec, slice_and_assign_slice) {
    std::mt19937_64 rng(2);
    BitVec v = random_vec(rng, 150);
    BitVec s = v.slice(37, 80);
    for (size_t i = 0; i < 80; i++) {
        EXPECT_EQ(s[i], v[37 + i]);
    }
    BitVec w(150);
    w.assign_slice(37, s);
    for (size_t i = 0; i < 150; i++) {
        EXPECT_EQ(w[i], i >= 37 && i < 117 && v[i]);
    }
}

TEST(bitvec, symplectic_inner_is_dot_with_dual) {
    std::mt19937_64 rng(3);
    for (size_t half : {1, 3, 40}) {
        for (int rep = 0; rep < 50; rep++) {
            BitVec a = random_vec(rng, 2 * half);
            BitVec b = random_vec(rng, 2 * half);
            bool oracle = false;
            for (size_t i = 0; i < half; i++) {
                oracle ^= (a[i] && b[half + i]) != (a[half + i] && b[i]);
            }
            EXPECT_EQ(symplectic_inner(a, b, half), oracle);
            EXPECT_EQ(dot(symplectic_dual(a, half), b), oracle);
            EXPECT_EQ(symplectic_inner(a, b, half), symplectic_inner(b, a, half));
        }
    }
}

TEST(bitvec, equal_vectors_hash_equal_and_order_is_strict) {
    BitVec a = BitVec::from_string("1010");
    BitVec b = BitVec::from_string("1010");
    BitVec c = BitVec::from_string("0110");
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_FALSE(a.lex_less(b));
    EXPECT_NE(a.lex_less(c), c.lex_less(a));
}
