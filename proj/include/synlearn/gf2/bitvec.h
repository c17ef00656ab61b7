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

#ifndef SYNLEARN_GF2_BITVEC_H
#define SYNLEARN_GF2_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synlearn::gf2 {

constexpr size_t kWordBits = 64;

constexpr size_t words_for(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past size() in the last word are always zero; every mutator keeps it
/// that way, so word-level comparisons and popcounts need no masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t len) : len_(len), words_(words_for(len), 0) {
    }

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVec from_string(std::string_view bits);
    static BitVec unit(size_t len, size_t index);

    size_t size() const noexcept {
        return len_;
    }
    size_t num_words() const noexcept {
        return words_.size();
    }

    bool get(size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i / kWordBits] ^= uint64_t{1} << (i % kWordBits);
    }
    void clear();

    /// Throws std::invalid_argument on length mismatch.
    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        a &= b;
        return a;
    }

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    std::optional<size_t> first_set() const;
    /// Indices of set bits in increasing order.
    std::vector<size_t> ones() const;

    /// Copy of bits [offset, offset + len).
    BitVec slice(size_t offset, size_t len) const;
    /// Overwrites bits [offset, offset + src.size()) with src.
    void assign_slice(size_t offset, const BitVec &src);

    std::span<const uint64_t> words() const noexcept {
        return words_;
    }
    std::span<uint64_t> words() noexcept {
        return words_;
    }

    std::string to_string() const;
    size_t hash() const noexcept;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic by bit index (bit 0 most significant for ordering).
    bool lex_less(const BitVec &other) const;

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec &v) const noexcept {
        return v.hash();
    }
};

/// Parity of the bitwise AND; the standard GF(2) dot product.
bool dot(const BitVec &a, const BitVec &b);

/// Symplectic form on vectors laid out as consecutive blocks of
/// [x(half_width) | z(half_width)] bits. Returns 1 iff the represented
/// Pauli operators anticommute. Throws std::invalid_argument when lengths
/// differ or are not a multiple of 2*half_width.
bool symplectic_inner(const BitVec &a, const BitVec &b, size_t half_width);

/// Swaps the x and z halves of every block, so that
/// symplectic_inner(a, b, h) == dot(symplectic_dual(a, h), b).
BitVec symplectic_dual(const BitVec &v, size_t half_width);

}  // namespace synlearn::gf2

#endif
