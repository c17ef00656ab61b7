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

// Compiled with -mavx2 -mpopcnt. Nothing here may run before avx2_table()
// has confirmed CPU support.

#include <immintrin.h>

#include "synlearn/gf2/kernels.h"

namespace synlearn::kernels {

namespace {

inline __m256i load(const uint64_t *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(uint64_t *p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

// Per-byte popcount via nibble lookup, summed into 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline uint64_t horizontal_sum(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

void avx2_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

bool avx2_and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_xor_si256(acc, _mm256_and_si256(load(a + i), load(b + i)));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; i++) {
        folded ^= a[i] & b[i];
    }
    return __builtin_parityll(folded);
}

uint64_t avx2_popcount(const uint64_t *a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    }
    uint64_t total = horizontal_sum(acc);
    for (; i < n; i++) {
        total += static_cast<uint64_t>(_mm_popcnt_u64(a[i]));
    }
    return total;
}

uint64_t avx2_xor_popcount(const uint64_t *a, const uint64_t *b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_xor_si256(load(a + i), load(b + i))));
    }
    uint64_t total = horizontal_sum(acc);
    for (; i < n; i++) {
        total += static_cast<uint64_t>(_mm_popcnt_u64(a[i] ^ b[i]));
    }
    return total;
}

const KernelTable kAvx2{"avx2", avx2_xor_into, avx2_and_parity, avx2_popcount, avx2_xor_popcount};

}  // namespace

const KernelTable *avx2_table_impl() {
    return &kAvx2;
}

}  // namespace synlearn::kernels
