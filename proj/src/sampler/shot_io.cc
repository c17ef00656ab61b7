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

#include "synlearn/sampler/shot_io.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace synlearn {

namespace {

template <typename T>
void put_le(std::ostream &out, T v) {
    for (size_t i = 0; i < sizeof(T); i++) {
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

template <typename T>
T get_le(std::istream &in) {
    T v = 0;
    for (size_t i = 0; i < sizeof(T); i++) {
        int c = in.get();
        if (c == std::char_traits<char>::eof()) {
            throw std::runtime_error("read_shots_binary: truncated header.");
        }
        v |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

}  // namespace

void write_shots_binary(std::ostream &out, const ShotSet &shots) {
    const size_t M = shots.num_checks();
    put_le<uint32_t>(out, kShotMagic);
    put_le<uint64_t>(out, M);
    put_le<uint64_t>(out, shots.num_shots());
    std::vector<char> row((M + 7) / 8);
    for (size_t s = 0; s < shots.num_shots(); s++) {
        std::fill(row.begin(), row.end(), 0);
        for (size_t i = 0; i < M; i++) {
            if (shots.column(i).get(s)) {
                row[i / 8] = static_cast<char>(row[i / 8] | (1 << (i % 8)));
            }
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

ShotSet read_shots_binary(std::istream &in) {
    if (get_le<uint32_t>(in) != kShotMagic) {
        throw std::runtime_error("read_shots_binary: bad magic number.");
    }
    uint64_t M = get_le<uint64_t>(in);
    uint64_t S = get_le<uint64_t>(in);
    if (M > (uint64_t{1} << 32) || S > (uint64_t{1} << 40)) {
        throw std::runtime_error("read_shots_binary: implausible header.");
    }
    ShotSet shots(M, S);
    std::vector<char> row((M + 7) / 8);
    for (uint64_t s = 0; s < S; s++) {
        in.read(row.data(), static_cast<std::streamsize>(row.size()));
        if (static_cast<size_t>(in.gcount()) != row.size()) {
            throw std::runtime_error("read_shots_binary: truncated at shot " + std::to_string(s) + ".");
        }
        for (size_t i = 0; i < M; i++) {
            if ((static_cast<unsigned char>(row[i / 8]) >> (i % 8)) & 1) {
                shots.column(i).set(s);
            }
        }
    }
    return shots;
}

void write_shots_csv(std::ostream &out, const ShotSet &shots) {
    out << "shot,bits\n";
    for (size_t s = 0; s < shots.num_shots(); s++) {
        out << s << "," << shots.record(s).to_string() << "\n";
    }
}

}  // namespace synlearn
