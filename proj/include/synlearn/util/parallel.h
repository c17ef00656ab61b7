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

#ifndef SYNLEARN_UTIL_PARALLEL_H
#define SYNLEARN_UTIL_PARALLEL_H

#include <cstddef>
#include <functional>

namespace synlearn::parallel {

/// Worker count used by parallel_for. Defaults to the hardware concurrency.
/// SYNLEARN_THREADS, when set, takes precedence over set_thread_count.
size_t thread_count();
void set_thread_count(size_t n);

/// Calls body(block) for every block in [0, num_blocks). Blocks are handed
/// to workers dynamically, so body must write only to per-block state; the
/// caller then reduces in block order, which keeps results identical for
/// any thread count. The first exception thrown by a body is rethrown.
void parallel_for(size_t num_blocks, const std::function<void(size_t)> &body);

}  // namespace synlearn::parallel

#endif
