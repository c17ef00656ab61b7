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

#include "synlearn/util/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace synlearn::parallel {

namespace {

std::atomic<size_t> &requested() {
    static std::atomic<size_t> n{0};
    return n;
}

size_t env_threads() {
    const char *env = std::getenv("SYNLEARN_THREADS");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    try {
        long v = std::stol(env);
        return v > 0 ? static_cast<size_t>(v) : 0;
    } catch (const std::exception &) {
        return 0;
    }
}

// Set on pool workers so nested parallel_for calls run inline instead of
// multiplying threads.
thread_local bool t_in_pool = false;

}  // namespace

size_t thread_count() {
    if (size_t e = env_threads()) {
        return e;
    }
    if (size_t r = requested().load()) {
        return r;
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

void set_thread_count(size_t n) {
    requested().store(n);
}

void parallel_for(size_t num_blocks, const std::function<void(size_t)> &body) {
    size_t workers = t_in_pool ? 1 : std::min(thread_count(), num_blocks);
    if (workers <= 1) {
        for (size_t b = 0; b < num_blocks; b++) {
            body(b);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        bool outer = t_in_pool;
        t_in_pool = true;
        while (true) {
            size_t b = next.fetch_add(1);
            if (b >= num_blocks) {
                t_in_pool = outer;
                return;
            }
            try {
                body(b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(num_blocks);
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t i = 1; i < workers; i++) {
        pool.emplace_back(run);
    }
    run();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace synlearn::parallel
