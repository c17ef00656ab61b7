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

#ifndef SYNLEARN_SAMPLER_SAMPLER_H
#define SYNLEARN_SAMPLER_SAMPLER_H

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "synlearn/faults/fault_model.h"
#include "synlearn/gf2/bitvec.h"
#include "synlearn/sampler/philox.h"

namespace synlearn {

/// Draws which generators fire in a shot: generator i fires independently
/// with probability q_i. Uses geometric skips at the largest rate and thins
/// each candidate by q_i / q_max, so the cost per shot is about
/// 1 + K q_max draws instead of K.
class FaultSampler {
   public:
    /// Throws std::invalid_argument if any q is negative or q >= 1.
    explicit FaultSampler(std::vector<double> q);

    size_t size() const noexcept {
        return q_.size();
    }

    /// Calls on_fire(i) in increasing i for each fired generator of the shot
    /// identified by (seed, shot).
    template <typename F>
    void fire(uint64_t seed, uint64_t shot, F &&on_fire) const {
        if (q_max_ <= 0) {
            return;
        }
        PhiloxStream rng(seed, shot);
        const double K = static_cast<double>(q_.size());
        double pos = -1;
        while (true) {
            double skip = log_keep_ == 0 ? 0 : std::floor(std::log(rng.next_open01()) / log_keep_);
            pos += skip + 1;
            if (!(pos < K)) {
                return;
            }
            size_t i = static_cast<size_t>(pos);
            if (q_[i] == q_max_ || rng.next_double() * q_max_ < q_[i]) {
                on_fire(i);
            }
        }
    }

   private:
    std::vector<double> q_;
    double q_max_ = 0;
    double log_keep_ = 0;  // log(1 - q_max)
};

/// Syndrome outcomes of many shots, stored column-major: column i holds check
/// i's outcome for every shot, so parities of check products are XORs of
/// whole columns.
class ShotSet {
   public:
    ShotSet() = default;
    ShotSet(size_t num_checks, size_t num_shots);

    size_t num_checks() const noexcept {
        return columns_.size();
    }
    size_t num_shots() const noexcept {
        return shots_;
    }
    const gf2::BitVec &column(size_t check) const {
        return columns_[check];
    }
    gf2::BitVec &column(size_t check) {
        return columns_[check];
    }
    /// Outcome bits of one shot (length num_checks()).
    gf2::BitVec record(size_t shot) const;
    void set_record(size_t shot, const gf2::BitVec &bits);

    /// Shots of a followed by shots of b.
    static ShotSet concat(const ShotSet &a, const ShotSet &b);
    bool operator==(const ShotSet &other) const = default;

   private:
    size_t shots_ = 0;
    std::vector<gf2::BitVec> columns_;
};

/// Samples shots; identical for any thread count. Throws
/// std::invalid_argument when shots == 0 or the model has negative
/// coefficients.
ShotSet sample_shots(const FaultModel &model, size_t shots, uint64_t seed);

struct EigenvalueEstimate {
    gf2::BitVec mu;
    double lambda_hat = 1;
    size_t shots = 0;
    /// (1 - lambda_hat) / 2.
    double bern_rate = 0;
};

/// Mean of (-1)^<mu, outcome> over shots. Throws on empty sets or a length
/// mismatch.
EigenvalueEstimate estimate_eigenvalue(const ShotSet &shots, const gf2::BitVec &mu);
std::vector<EigenvalueEstimate> estimate_eigenvalues(const ShotSet &shots, const std::vector<gf2::BitVec> &mus);

/// Product of the measurement generators selected by mu.
SpacetimePauli meas_product(const SpacetimeCode &code, const gf2::BitVec &mu);

/// ceil(12 / (eps tau^2) * ln(1 / delta)). Throws std::domain_error outside
/// 0 < eps < 1/2, 0 < tau < 1, 0 < delta < 1.
uint64_t shots_for_precision(double eps_guess, double tau, double delta);

}  // namespace synlearn

#endif
