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

#include "synlearn/gf2/kernels.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace synlearn;

namespace {

// Bit-by-bit oracles, independent of any word trick.
uint64_t naive_popcount(const std::vector<uint64_t> &a) {
    uint64_t c = 0;
    for (uint64_t w : a) {
        for (int b = 0; b < 64; b++) {
            c += (w >> b) & 1;
        }
    }
    return c;
}

std::vector<uint64_t> random_words(std::mt19937_64 &rng, size_t n) {
    std::vector<uint64_t> v(n);
    for (auto &w : v) {
        w = rng();
    }
    return v;
}

}  // namespace

TEST(kernels, scalar_table_is_always_available) {
    auto tables = kernels::available_tables();
    ASSERT_FALSE(tables.empty());
    EXPECT_EQ(tables[0], &kernels::scalar_table());
}

TEST(kernels, every_table_matches_bitwise_oracles) {
    std::mt19937_64 rng(5);
    for (const kernels::KernelTable *t : kernels::available_tables()) {
        SCOPED_TRACE(t->name);
        for (size_t n = 0; n <= 70; n++) {
            auto a = random_words(rng, n);
            auto b = random_words(rng, n);
            EXPECT_EQ(t->popcount(a.data(), n), naive_popcount(a));

            std::vector<uint64_t> x(n);
            for (size_t i = 0; i < n; i++) {
                x[i] = a[i] ^ b[i];
            }
            EXPECT_EQ(t->xor_popcount(a.data(), b.data(), n), naive_popcount(x));

            std::vector<uint64_t> y(n);
            for (size_t i = 0; i < n; i++) {
                y[i] = a[i] & b[i];
            }
            EXPECT_EQ(t->and_parity(a.data(), b.data(), n), (naive_popcount(y) & 1) == 1);

            auto dst = a;
            t->xor_into(dst.data(), b.data(), n);
            EXPECT_EQ(dst, x);
        }
    }
}

TEST(kernels, simd_tables_agree_with_scalar_on_unaligned_views) {
    std::mt19937_64 rng(9);
    const auto &ref = kernels::scalar_table();
    auto a = random_words(rng, 200);
    auto b = random_words(rng, 200);
    for (const kernels::KernelTable *t : kernels::available_tables()) {
        SCOPED_TRACE(t->name);
        for (size_t off = 0; off < 5; off++) {
            for (size_t n : {1, 3, 4, 7, 8, 31, 64, 150}) {
                EXPECT_EQ(t->popcount(a.data() + off, n), ref.popcount(a.data() + off, n));
                EXPECT_EQ(t->xor_popcount(a.data() + off, b.data(), n), ref.xor_popcount(a.data() + off, b.data(), n));
                EXPECT_EQ(t->and_parity(a.data() + off, b.data() + 1, n), ref.and_parity(a.data() + off, b.data() + 1, n));
                auto d1 = b;
                auto d2 = b;
                t->xor_into(d1.data() + off, a.data(), n);
                ref.xor_into(d2.data() + off, a.data(), n);
                EXPECT_EQ(d1, d2);
            }
        }
    }
}

TEST(kernels, set_active_selects_and_rejects) {
    const std::string before = kernels::active().name;
    kernels::set_active("scalar");
    EXPECT_STREQ(kernels::active().name, "scalar");
    EXPECT_THROW(kernels::set_active("no-such-table"), std::invalid_argument);
    kernels::set_active(before);
    EXPECT_EQ(std::string(kernels::active().name), before);
}
