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

#ifndef SYNLEARN_ESTIMATOR_ESTIMATOR_H
#define SYNLEARN_ESTIMATOR_ESTIMATOR_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "synlearn/faults/fault_model.h"
#include "synlearn/gf2/real.h"
#include "synlearn/sampler/sampler.h"

namespace synlearn {

/// Rows mu select products of measurement generators. A(i, c) is 1 iff the
/// product for row i anticommutes with class c, i.e. parity(mu_i . sigma_c).
struct SubsampleDesign {
    std::vector<gf2::BitVec> rows;
    uint64_t seed = 0;
    bool full = false;
    linalg::RealMatrix A;

    size_t q() const noexcept {
        return rows.size();
    }
    size_t num_classes() const noexcept {
        return A.cols();
    }
};

/// max(4K, K + 16).
size_t default_q_rows(size_t num_classes);

/// q_rows uniform nonzero mu, drawn with replacement; row i depends only on
/// (seed, i). Throws std::invalid_argument when q_rows < K.
SubsampleDesign draw_design(const SpacetimeCode &code, const PriorDistribution &prior, size_t q_rows, uint64_t seed);

/// All 2^M rows including mu = 0. Throws std::length_error for M > 20.
SubsampleDesign full_design(const SpacetimeCode &code, const PriorDistribution &prior);

/// The augmented signed design [2A - 1 | 1] (q x (K + 1)).
linalg::RealMatrix signed_augmented(const SubsampleDesign &design);

/// Operational RIP constant max(s_max^2 / q - 1, 1 - s_min^2 / q) of the
/// augmented signed design.
double rip_constant(const SubsampleDesign &design);

struct RecoveryResult {
    /// -log(1 - 2 q_bar) per class.
    std::vector<double> x_bar;
    std::vector<double> q_bar;
    /// Fitted total sum of x (the augmented unknown).
    double s_hat = 0;
    double residual = 0;
    double sigma_min = 0;
    double sigma_max = 0;
    double delta_hat = 0;
    /// Rows whose eigenvalue estimate was clamped to the floor, if any.
    std::vector<size_t> clamped_rows;
    bool tainted() const noexcept {
        return !clamped_rows.empty();
    }
};

/// y_i = -log lambda_hat_i. Rows with lambda_hat <= 0 throw
/// std::domain_error listing them, unless clamp_floor is given, in which case
/// they are raised to it and reported through clamped_rows.
std::vector<double> log_targets(
    const std::vector<EigenvalueEstimate> &estimates, std::optional<double> clamp_floor,
    std::vector<size_t> *clamped_rows);

/// Solves [2A - 1 | 1] (x, s) = 2y in the least-squares sense and maps x to
/// q_bar = (1 - exp(-x)) / 2. Throws std::invalid_argument on non-finite y
/// (listing rows) or a length mismatch, and linalg::RankDeficientError when
/// the augmented design is rank deficient.
RecoveryResult recover(const SubsampleDesign &design, const std::vector<double> &y_bar);

/// Exact targets y_i = -log lambda for the design rows under prior.
std::vector<double> exact_targets(const SubsampleDesign &design, const PriorDistribution &prior);

struct LogicalEigenvalue {
    double lambda = 1;
    /// Bound on |log lambda - log lambda_true|: 2 ||l||_2 eps / sqrt(1 - delta).
    double log_bound = 0;
};

/// lambda = exp(-sum_c l[c] x_bar[c]). eps is the per-row log-noise level.
/// Throws std::invalid_argument on a length mismatch.
LogicalEigenvalue reconstruct_logical_eigenvalue(
    const SubsampleDesign &design, const RecoveryResult &result, const std::vector<uint8_t> &l_pattern, double eps);

}  // namespace synlearn

#endif
