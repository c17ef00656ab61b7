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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace synlearn::kernels {

// Defined in kernels_avx2.cc / kernels_neon.cc when those are compiled.
const KernelTable *avx2_table_impl();
const KernelTable *neon_table_impl();

namespace {

void scalar_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

bool scalar_and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return __builtin_parityll(acc);
}

uint64_t scalar_popcount(const uint64_t *a, size_t n) {
    uint64_t total = 0;
    for (size_t i = 0; i < n; i++) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i]));
    }
    return total;
}

uint64_t scalar_xor_popcount(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t total = 0;
    for (size_t i = 0; i < n; i++) {
        total += static_cast<uint64_t>(__builtin_popcountll(a[i] ^ b[i]));
    }
    return total;
}

const KernelTable kScalar{
    "scalar", scalar_xor_into, scalar_and_parity, scalar_popcount, scalar_xor_popcount};

const KernelTable *table_by_name(std::string_view name) {
    if (name == "scalar") {
        return &kScalar;
    }
    if (name == "avx2") {
        return avx2_table();
    }
    if (name == "neon") {
        return neon_table();
    }
    return nullptr;
}

const KernelTable *pick_default() {
    if (const char *env = std::getenv("SYNLEARN_KERNELS"); env != nullptr && *env != '\0') {
        const KernelTable *t = table_by_name(env);
        if (t == nullptr) {
            throw std::invalid_argument(
                "SYNLEARN_KERNELS='" + std::string(env) + "' is unknown or unsupported on this CPU.");
        }
        return t;
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    if (const KernelTable *t = neon_table()) {
        return t;
    }
    return &kScalar;
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{pick_default()};
    return slot;
}

}  // namespace

const KernelTable &scalar_table() {
    return kScalar;
}

const KernelTable *avx2_table() {
#if defined(SYNLEARN_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? avx2_table_impl() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable *neon_table() {
#if defined(SYNLEARN_HAVE_NEON)
    return neon_table_impl();
#else
    return nullptr;
#endif
}

std::vector<const KernelTable *> available_tables() {
    std::vector<const KernelTable *> out{&kScalar};
    if (const KernelTable *t = avx2_table()) {
        out.push_back(t);
    }
    if (const KernelTable *t = neon_table()) {
        out.push_back(t);
    }
    return out;
}

const KernelTable &active() {
    return *active_slot().load(std::memory_order_relaxed);
}

void set_active(std::string_view name) {
    const KernelTable *t = table_by_name(name);
    if (t == nullptr) {
        throw std::invalid_argument("Kernel table '" + std::string(name) + "' is unknown or unsupported.");
    }
    active_slot().store(t, std::memory_order_relaxed);
}

}  // namespace synlearn::kernels
