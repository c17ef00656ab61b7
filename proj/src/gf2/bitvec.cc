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

#include "synlearn/gf2/bitvec.h"

#include <algorithm>
#include <stdexcept>

#include "synlearn/gf2/kernels.h"

namespace synlearn::gf2 {

namespace {

void require_same_size(const BitVec &a, const BitVec &b, const char *op) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
            std::to_string(b.size()) + ").");
    }
}

}  // namespace

BitVec BitVec::from_string(std::string_view bits) {
    BitVec out(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            out.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVec::from_string: unexpected character '" + std::string(1, bits[i]) + "'.");
        }
    }
    return out;
}

BitVec BitVec::unit(size_t len, size_t index) {
    if (index >= len) {
        throw std::out_of_range("BitVec::unit: index out of range.");
    }
    BitVec out(len);
    out.set(index);
    return out;
}

void BitVec::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(*this, other, "xor");
    kernels::active().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(*this, other, "and");
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

size_t BitVec::popcount() const {
    return kernels::active().popcount(words_.data(), words_.size());
}

std::optional<size_t> BitVec::first_set() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w] != 0) {
            return w * kWordBits + static_cast<size_t>(__builtin_ctzll(words_[w]));
        }
    }
    return std::nullopt;
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t word = words_[w];
        while (word != 0) {
            out.push_back(w * kWordBits + static_cast<size_t>(__builtin_ctzll(word)));
            word &= word - 1;
        }
    }
    return out;
}

BitVec BitVec::slice(size_t offset, size_t len) const {
    if (offset + len > len_) {
        throw std::out_of_range("BitVec::slice out of range.");
    }
    BitVec out(len);
    for (size_t i = 0; i < len; i++) {
        if (get(offset + i)) {
            out.set(i);
        }
    }
    return out;
}

void BitVec::assign_slice(size_t offset, const BitVec &src) {
    if (offset + src.size() > len_) {
        throw std::out_of_range("BitVec::assign_slice out of range.");
    }
    for (size_t i = 0; i < src.size(); i++) {
        set(offset + i, src.get(i));
    }
}

std::string BitVec::to_string() const {
    std::string out(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

size_t BitVec::hash() const noexcept {
    // FNV-1a over words, seeded with the length.
    uint64_t h = 1469598103934665603ULL ^ len_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

bool BitVec::lex_less(const BitVec &other) const {
    size_t n = std::min(len_, other.len_);
    for (size_t i = 0; i < n; i++) {
        if (get(i) != other.get(i)) {
            return get(i);
        }
    }
    return len_ < other.len_;
}

bool dot(const BitVec &a, const BitVec &b) {
    require_same_size(a, b, "dot");
    return kernels::active().and_parity(a.words().data(), b.words().data(), a.num_words());
}

bool symplectic_inner(const BitVec &a, const BitVec &b, size_t half_width) {
    require_same_size(a, b, "symplectic_inner");
    if (half_width == 0 || a.size() % (2 * half_width) != 0) {
        throw std::invalid_argument("symplectic_inner: length is not a multiple of the x|z block width.");
    }
    bool acc = false;
    for (size_t base = 0; base < a.size(); base += 2 * half_width) {
        for (size_t i = 0; i < half_width; i++) {
            acc ^= (a.get(base + i) && b.get(base + half_width + i)) ^
                   (a.get(base + half_width + i) && b.get(base + i));
        }
    }
    return acc;
}

BitVec symplectic_dual(const BitVec &v, size_t half_width) {
    if (half_width == 0 || v.size() % (2 * half_width) != 0) {
        throw std::invalid_argument("symplectic_dual: length is not a multiple of the x|z block width.");
    }
    BitVec out(v.size());
    for (size_t base = 0; base < v.size(); base += 2 * half_width) {
        for (size_t i = 0; i < half_width; i++) {
            if (v.get(base + i)) {
                out.set(base + half_width + i);
            }
            if (v.get(base + half_width + i)) {
                out.set(base + i);
            }
        }
    }
    return out;
}

}  // namespace synlearn::gf2
