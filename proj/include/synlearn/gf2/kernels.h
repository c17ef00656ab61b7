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

#ifndef SYNLEARN_GF2_KERNELS_H
#define SYNLEARN_GF2_KERNELS_H

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace synlearn::kernels {

/// Word-level kernels behind every bit-packed operation in the library.
///
/// A scalar reference table is always available. Vector tables (AVX2 on
/// x86-64, NEON on aarch64) are compiled when the toolchain targets that
/// architecture and are only handed out when the running CPU supports them.
/// All tables must produce bit-identical results; `kernels.test.cc` checks
/// every available table against the scalar one.
struct KernelTable {
    const char *name;
    /// dst[i] ^= src[i] for i < n.
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t n);
    /// Parity of popcount(a & b) over n words.
    bool (*and_parity)(const uint64_t *a, const uint64_t *b, size_t n);
    /// Total popcount over n words.
    uint64_t (*popcount)(const uint64_t *a, size_t n);
    /// popcount(a ^ b) over n words.
    uint64_t (*xor_popcount)(const uint64_t *a, const uint64_t *b, size_t n);
};

const KernelTable &scalar_table();

/// nullptr when not compiled in or not supported by the running CPU.
const KernelTable *avx2_table();
const KernelTable *neon_table();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable *> available_tables();

/// The table used by the library. Chosen once: the best supported table,
/// unless SYNLEARN_KERNELS names another one ("scalar", "avx2", "neon").
const KernelTable &active();

/// Overrides the active table. Throws std::invalid_argument for unknown or
/// unsupported names. Intended for tests and benchmarks.
void set_active(std::string_view name);

}  // namespace synlearn::kernels

#endif
