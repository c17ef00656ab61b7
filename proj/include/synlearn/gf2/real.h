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

#ifndef SYNLEARN_GF2_REAL_H
#define SYNLEARN_GF2_REAL_H

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synlearn::linalg {

/// Dense row-major double matrix. Entries must be finite; the solvers
/// reject anything else.
class RealMatrix {
   public:
    RealMatrix() = default;
    RealMatrix(size_t rows, size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    }

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    double &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    double at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const double> data() const noexcept {
        return data_;
    }

    bool all_finite() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

class RankDeficientError : public std::runtime_error {
   public:
    RankDeficientError(const std::string &what, std::vector<size_t> columns)
        : std::runtime_error(what), deficient_columns_(std::move(columns)) {
    }
    const std::vector<size_t> &deficient_columns() const noexcept {
        return deficient_columns_;
    }

   private:
    std::vector<size_t> deficient_columns_;
};

struct LstsqResult {
    std::vector<double> x;
    /// ||m x - rhs||_2
    double residual = 0;
};

/// argmin ||m x - rhs||_2 by column-pivoted Householder QR.
///
/// Throws RankDeficientError (listing the columns the pivoting left
/// dependent) when m lacks full column rank, and std::invalid_argument on
/// shape mismatch or non-finite input.
LstsqResult lstsq_solve(const RealMatrix &m, std::span<const double> rhs);

struct SingularValueRange {
    double min = 0;
    double max = 0;
};

/// Extreme singular values of m (m.rows() >= m.cols() expected).
SingularValueRange singular_value_range(const RealMatrix &m);

/// Numerical column rank via SVD with the usual eps * max(dim) * sigma_max cutoff.
size_t numerical_rank(const RealMatrix &m);

}  // namespace synlearn::linalg

#endif
