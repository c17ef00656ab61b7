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

#include "synlearn/gf2/bitmatrix.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "synlearn/gf2/kernels.h"

namespace synlearn::gf2 {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVec> rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        m.set_row(r, rows[r]);
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    uint64_t mask = uint64_t{1} << (c % kWordBits);
    uint64_t &w = data_[r * stride_ + c / kWordBits];
    if (value) {
        w |= mask;
    } else {
        w &= ~mask;
    }
}

BitVec BitMatrix::row_vec(size_t r) const {
    BitVec out(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, out.words().begin());
    return out;
}

void BitMatrix::set_row(size_t r, const BitVec &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument(
            "BitMatrix::set_row: row has length " + std::to_string(v.size()) + ", expected " +
            std::to_string(cols_) + ".");
    }
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::append_row(const BitVec &v) {
    data_.resize(data_.size() + stride_, 0);
    rows_++;
    set_row(rows_ - 1, v);
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    kernels::active().xor_into(data_.data() + dst * stride_, data_.data() + src * stride_, stride_);
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
        data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
        data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                out.set(c, r);
            }
        }
    }
    return out;
}

BitVec BitMatrix::multiply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix::multiply: vector length does not match column count.");
    }
    BitVec out(rows_);
    const auto &k = kernels::active();
    for (size_t r = 0; r < rows_; r++) {
        if (k.and_parity(data_.data() + r * stride_, v.words().data(), stride_)) {
            out.set(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("BitMatrix::multiply: inner dimensions differ.");
    }
    BitMatrix out(rows_, other.cols_);
    const auto &k = kernels::active();
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                k.xor_into(out.data_.data() + r * out.stride_, other.data_.data() + c * other.stride_, out.stride_);
            }
        }
    }
    return out;
}

namespace {

// Reduced row echelon form in place. Returns pivot columns, one per leading
// row, considering only columns < col_limit.
std::vector<size_t> rref_in_place(BitMatrix &m, size_t col_limit) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < col_limit && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(r, p);
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.get(i, c)) {
                m.xor_row(i, r);
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

size_t rank(const BitMatrix &m) {
    BitMatrix work = m;
    size_t r = 0;
    for (size_t c = 0; c < work.cols() && r < work.rows(); c++) {
        size_t p = r;
        while (p < work.rows() && !work.get(p, c)) {
            p++;
        }
        if (p == work.rows()) {
            continue;
        }
        work.swap_rows(r, p);
        for (size_t i = r + 1; i < work.rows(); i++) {
            if (work.get(i, c)) {
                work.xor_row(i, r);
            }
        }
        r++;
    }
    return r;
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument(
            "gf2::solve: rhs has length " + std::to_string(rhs.size()) + " but the matrix has " +
            std::to_string(m.rows()) + " rows.");
    }
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m.get(r, c)) {
                aug.set(r, c);
            }
        }
        if (rhs.get(r)) {
            aug.set(r, m.cols());
        }
    }
    std::vector<size_t> pivots = rref_in_place(aug, m.cols());
    for (size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug.get(r, m.cols())) {
            return std::nullopt;
        }
    }
    BitVec x(m.cols());
    for (size_t r = 0; r < pivots.size(); r++) {
        if (aug.get(r, m.cols())) {
            x.set(pivots[r]);
        }
    }
    return x;
}

BitMatrix nullspace(const BitMatrix &m) {
    BitMatrix work = m;
    std::vector<size_t> pivots = rref_in_place(work, work.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    BitMatrix out(0, m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec x(m.cols());
        x.set(f);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (work.get(r, f)) {
                x.set(pivots[r]);
            }
        }
        out.append_row(x);
    }
    return out;
}

bool SpanBasis::insert(const BitVec &v) {
    if (v.size() != len_) {
        throw std::invalid_argument("SpanBasis::insert: vector length does not match the basis.");
    }
    BitVec r = reduce(v);
    std::optional<size_t> pivot = r.first_set();
    if (!pivot) {
        return false;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(*pivot);
    return true;
}

void SpanBasis::reduce_words(std::span<uint64_t> words) const {
    const auto &k = kernels::active();
    for (size_t i = 0; i < basis_.size(); i++) {
        size_t p = pivots_[i];
        if ((words[p / kWordBits] >> (p % kWordBits)) & 1) {
            k.xor_into(words.data(), basis_[i].words().data(), words.size());
        }
    }
}

BitVec SpanBasis::reduce(BitVec v) const {
    if (v.size() != len_) {
        throw std::invalid_argument("SpanBasis::reduce: vector length does not match the basis.");
    }
    reduce_words(v.words());
    return v;
}

bool SpanBasis::contains(const BitVec &v) const {
    return reduce(v).none();
}

}  // namespace synlearn::gf2
