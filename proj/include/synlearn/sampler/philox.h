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

#ifndef SYNLEARN_SAMPLER_PHILOX_H
#define SYNLEARN_SAMPLER_PHILOX_H

#include <array>
#include <cstdint>

namespace synlearn {

/// Philox4x32-10 counter-based block function.
using PhiloxCounter = std::array<uint32_t, 4>;
using PhiloxKey = std::array<uint32_t, 2>;
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Deterministic random stream identified by (seed, stream, substream).
///
/// Keyed on the seed; the counter holds the block index, the substream and
/// the 64-bit stream id, so distinct (stream, substream) pairs never share a
/// block. Used with stream = shot index to make every shot reproducible on
/// its own regardless of how shots are split across threads.
class PhiloxStream {
   public:
    PhiloxStream(uint64_t seed, uint64_t stream, uint32_t substream = 0);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double next_double();
    /// Uniform on (0, 1].
    double next_open01() {
        return 1.0 - next_double();
    }

   private:
    void refill();

    PhiloxKey key_;
    PhiloxCounter counter_;
    PhiloxCounter block_{};
    unsigned used_ = 4;
};

}  // namespace synlearn

#endif
