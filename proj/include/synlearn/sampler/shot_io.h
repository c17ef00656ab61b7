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

#ifndef SYNLEARN_SAMPLER_SHOT_IO_H
#define SYNLEARN_SAMPLER_SHOT_IO_H

#include <cstdint>
#include <iosfwd>

#include "synlearn/sampler/sampler.h"

namespace synlearn {

/// Binary layout, little-endian: u32 magic 'SLSH', u64 M, u64 S, then for
/// each shot ceil(M / 8) bytes with check i at bit (i % 8) of byte i / 8.
constexpr uint32_t kShotMagic = 0x48534C53u;

void write_shots_binary(std::ostream &out, const ShotSet &shots);
/// Throws std::runtime_error on a bad magic number or a truncated stream.
ShotSet read_shots_binary(std::istream &in);

/// "shot,bits" header, then one row per shot with the outcomes as a '0'/'1'
/// string, check 0 first.
void write_shots_csv(std::ostream &out, const ShotSet &shots);

}  // namespace synlearn

#endif
