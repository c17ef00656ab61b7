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

#ifndef SYNLEARN_GF2_BITMATRIX_H
#define SYNLEARN_GF2_BITMATRIX_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synlearn/gf2/bitvec.h"

namespace synlearn::gf2 {

/// Dense row-major matrix over GF(2). Each row occupies words_for(cols)
/// words; padding bits stay zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Every row must have length `cols`.
    static BitMatrix from_rows(std::span<const BitVec> rows, size_t cols);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    size_t stride() const noexcept {
        return stride_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(size_t r, size_t c, bool value = true);

    std::span<uint64_t> row(size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    BitVec row_vec(size_t r) const;
    void set_row(size_t r, const BitVec &v);
    void append_row(const BitVec &v);

    /// row[dst] ^= row[src].
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    BitMatrix transposed() const;
    /// (M v)_r = dot(row r, v).
    BitVec multiply(const BitVec &v) const;
    BitMatrix multiply(const BitMatrix &other) const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Row rank over GF(2). The argument is not modified.
size_t rank(const BitMatrix &m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument when
/// rhs.size() != m.rows().
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &rhs);

/// Basis of {x : m x = 0} as the rows of the result (length m.cols()).
BitMatrix nullspace(const BitMatrix &m);

/// Row-echelon basis of a subspace, grown one vector at a time.
///
/// Basis vectors are kept reduced against each other's pivots, so a single
/// forward pass in insertion order fully reduces any query vector.
class SpanBasis {
   public:
    explicit SpanBasis(size_t len) : len_(len) {
    }

    size_t length() const noexcept {
        return len_;
    }
    size_t rank() const noexcept {
        return basis_.size();
    }
    const std::vector<BitVec> &basis() const noexcept {
        return basis_;
    }
    const std::vector<size_t> &pivots() const noexcept {
        return pivots_;
    }

    /// Adds v to the span. Returns true iff v was independent.
    bool insert(const BitVec &v);
    /// Residue of v after elimination; zero iff v is in the span.
    BitVec reduce(BitVec v) const;
    /// In-place reduction on raw words of length words_for(length()).
    void reduce_words(std::span<uint64_t> words) const;
    bool contains(const BitVec &v) const;

   private:
    size_t len_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace synlearn::gf2

#endif
