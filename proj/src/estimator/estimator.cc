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

#include "synlearn/estimator/estimator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "synlearn/sampler/philox.h"

namespace synlearn {

namespace {

// Substream used for design rows, so rows never reuse shot randomness.
constexpr uint32_t kDesignSubstream = 0x44455347u;

std::string join(const std::vector<size_t> &v, size_t limit = 20) {
    std::string out;
    for (size_t i = 0; i < v.size() && i < limit; i++) {
        out += (i ? ", " : "") + std::to_string(v[i]);
    }
    if (v.size() > limit) {
        out += ", ...";
    }
    return out;
}

void fill_matrix(SubsampleDesign &d, const PriorDistribution &prior) {
    d.A = linalg::RealMatrix(d.rows.size(), prior.size());
    for (size_t i = 0; i < d.rows.size(); i++) {
        for (size_t c = 0; c < prior.size(); c++) {
            d.A.at(i, c) = gf2::dot(d.rows[i], prior.classes[c].syndrome) ? 1.0 : 0.0;
        }
    }
}

}  // namespace

size_t default_q_rows(size_t num_classes) {
    return std::max(4 * num_classes, num_classes + 16);
}

SubsampleDesign draw_design(const SpacetimeCode &code, const PriorDistribution &prior, size_t q_rows, uint64_t seed) {
    if (q_rows < prior.size()) {
        throw std::invalid_argument(
            "draw_design: q_rows = " + std::to_string(q_rows) + " is below the class count " +
            std::to_string(prior.size()) + ".");
    }
    const size_t M = code.num_meas();
    if (M == 0) {
        throw std::invalid_argument("draw_design: the code has no measurement generators.");
    }
    SubsampleDesign d;
    d.seed = seed;
    d.rows.reserve(q_rows);
    for (size_t i = 0; i < q_rows; i++) {
        PhiloxStream rng(seed, i, kDesignSubstream);
        gf2::BitVec mu(M);
        do {
            for (size_t w = 0; w < mu.num_words(); w++) {
                mu.words()[w] = rng.next_u64();
            }
            if (M % 64 != 0) {
                mu.words().back() &= (uint64_t{1} << (M % 64)) - 1;
            }
        } while (mu.none());
        d.rows.push_back(std::move(mu));
    }
    fill_matrix(d, prior);
    return d;
}

SubsampleDesign full_design(const SpacetimeCode &code, const PriorDistribution &prior) {
    const size_t M = code.num_meas();
    if (M > 20) {
        throw std::length_error("full_design: 2^M rows with M = " + std::to_string(M) + " exceeds the 2^20 guard.");
    }
    SubsampleDesign d;
    d.full = true;
    for (uint64_t x = 0; x < (uint64_t{1} << M); x++) {
        gf2::BitVec mu(M);
        if (M > 0) {
            mu.words()[0] = x;
        }
        d.rows.push_back(std::move(mu));
    }
    fill_matrix(d, prior);
    return d;
}

linalg::RealMatrix signed_augmented(const SubsampleDesign &design) {
    const size_t q = design.q();
    const size_t K = design.num_classes();
    linalg::RealMatrix m(q, K + 1);
    for (size_t i = 0; i < q; i++) {
        for (size_t c = 0; c < K; c++) {
            m.at(i, c) = 2 * design.A.at(i, c) - 1;
        }
        m.at(i, K) = 1;
    }
    return m;
}

double rip_constant(const SubsampleDesign &design) {
    linalg::SingularValueRange s = linalg::singular_value_range(signed_augmented(design));
    double q = static_cast<double>(design.q());
    return std::max(s.max * s.max / q - 1, 1 - s.min * s.min / q);
}

std::vector<double> log_targets(
    const std::vector<EigenvalueEstimate> &estimates, std::optional<double> clamp_floor,
    std::vector<size_t> *clamped_rows) {
    std::vector<double> y;
    std::vector<size_t> bad;
    y.reserve(estimates.size());
    for (size_t i = 0; i < estimates.size(); i++) {
        double lam = estimates[i].lambda_hat;
        if (lam <= 0) {
            bad.push_back(i);
            lam = clamp_floor.value_or(1);
        }
        y.push_back(-std::log(lam));
    }
    if (!bad.empty()) {
        if (!clamp_floor) {
            throw std::domain_error(
                "Estimated eigenvalue <= 0 on design rows [" + join(bad) +
                "]; the recovery assumes every eigenvalue is positive. Increase the shot count or pass a clamp "
                "floor (which taints the result).");
        }
        if (clamped_rows != nullptr) {
            *clamped_rows = bad;
        }
    }
    return y;
}

RecoveryResult recover(const SubsampleDesign &design, const std::vector<double> &y_bar) {
    const size_t q = design.q();
    const size_t K = design.num_classes();
    if (y_bar.size() != q) {
        throw std::invalid_argument(
            "recover: got " + std::to_string(y_bar.size()) + " targets for " + std::to_string(q) + " rows.");
    }
    std::vector<size_t> bad;
    for (size_t i = 0; i < q; i++) {
        if (!std::isfinite(y_bar[i])) {
            bad.push_back(i);
        }
    }
    if (!bad.empty()) {
        throw std::invalid_argument(
            "recover: non-finite targets on rows [" + join(bad) +
            "] (an eigenvalue estimate was <= 0; the recovery assumes positive eigenvalues).");
    }
    linalg::RealMatrix phi = signed_augmented(design);
    std::vector<double> rhs(q);
    for (size_t i = 0; i < q; i++) {
        rhs[i] = 2 * y_bar[i];
    }
    linalg::LstsqResult sol;
    try {
        sol = linalg::lstsq_solve(phi, rhs);
    } catch (const linalg::RankDeficientError &e) {
        throw linalg::RankDeficientError(
            std::string(e.what()) + " The augmented design is rank deficient; increase q_rows.",
            e.deficient_columns());
    }
    RecoveryResult r;
    r.x_bar.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(K));
    r.s_hat = sol.x[K];
    r.residual = sol.residual;
    r.q_bar.reserve(K);
    for (double x : r.x_bar) {
        r.q_bar.push_back(0.5 * (1 - std::exp(-x)));
    }
    linalg::SingularValueRange s = linalg::singular_value_range(phi);
    r.sigma_min = s.min;
    r.sigma_max = s.max;
    double qd = static_cast<double>(q);
    r.delta_hat = std::max(s.max * s.max / qd - 1, 1 - s.min * s.min / qd);
    return r;
}

std::vector<double> exact_targets(const SubsampleDesign &design, const PriorDistribution &prior) {
    if (design.num_classes() != prior.size()) {
        throw std::invalid_argument("exact_targets: class count mismatch.");
    }
    std::vector<double> y(design.q(), 0.0);
    for (size_t i = 0; i < design.q(); i++) {
        for (size_t c = 0; c < prior.size(); c++) {
            if (design.A.at(i, c) != 0) {
                y[i] -= std::log(1 - 2 * prior.classes[c].q);
            }
        }
    }
    return y;
}

LogicalEigenvalue reconstruct_logical_eigenvalue(
    const SubsampleDesign &design, const RecoveryResult &result, const std::vector<uint8_t> &l_pattern, double eps) {
    if (l_pattern.size() != result.x_bar.size() || l_pattern.size() != design.num_classes()) {
        throw std::invalid_argument("reconstruct_logical_eigenvalue: pattern length differs from the class count.");
    }
    double log_lambda = 0;
    double norm2 = 0;
    for (size_t c = 0; c < l_pattern.size(); c++) {
        if (l_pattern[c]) {
            log_lambda -= result.x_bar[c];
            norm2 += 1;
        }
    }
    LogicalEigenvalue out;
    out.lambda = std::exp(log_lambda);
    out.log_bound = result.delta_hat < 1 ? 2 * std::sqrt(norm2) * eps / std::sqrt(1 - result.delta_hat)
                                         : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace synlearn
