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

// Only compiled for aarch64 targets, where NEON is part of the base ISA.

#include <arm_neon.h>

#include "synlearn/gf2/kernels.h"

namespace synlearn::kernels {

namespace {

inline uint64_t popcount_q(uint64x2_t v) {
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

void neon_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

bool neon_and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return __builtin_parityll(folded);
}

uint64_t neon_popcount(const uint64_t *a, size_t n) {
    uint64_t total = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        total += popcount_q(vld1q_u64(a + i));
    }
    for (; i < n; i++) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    }
    return total;
}

uint64_t neon_xor_popcount(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t total = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        total += popcount_q(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; i++) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i] ^ b[i]));
    }
    return total;
}

const KernelTable kNeon{"neon", neon_xor_into, neon_and_parity, neon_popcount, neon_xor_popcount};

}  // namespace

const KernelTable *neon_table_impl() {
    return &kNeon;
}

}  // namespace synlearn::kernels
