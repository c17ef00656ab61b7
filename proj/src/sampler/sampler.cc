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

#include "synlearn/sampler/sampler.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "synlearn/gf2/kernels.h"
#include "synlearn/util/parallel.h"

namespace synlearn {

namespace {

constexpr size_t kShotsPerBlock = 1 << 14;  // multiple of 64: blocks own whole words

}  // namespace

FaultSampler::FaultSampler(std::vector<double> q) : q_(std::move(q)) {
    for (size_t i = 0; i < q_.size(); i++) {
        if (q_[i] < 0) {
            throw std::invalid_argument(
                "Generator " + std::to_string(i) +
                " has q < 0: sign-extended models cannot be sampled directly, and quasi-probability sampling "
                "is not supported.");
        }
        if (!(q_[i] < 1)) {
            throw std::invalid_argument("Generator " + std::to_string(i) + " has q >= 1.");
        }
        q_max_ = std::max(q_max_, q_[i]);
    }
    log_keep_ = std::log1p(-q_max_);
}

ShotSet::ShotSet(size_t num_checks, size_t num_shots) : shots_(num_shots), columns_(num_checks, gf2::BitVec(num_shots)) {
}

gf2::BitVec ShotSet::record(size_t shot) const {
    gf2::BitVec out(columns_.size());
    for (size_t i = 0; i < columns_.size(); i++) {
        out.set(i, columns_[i].get(shot));
    }
    return out;
}

void ShotSet::set_record(size_t shot, const gf2::BitVec &bits) {
    if (bits.size() != columns_.size()) {
        throw std::invalid_argument("ShotSet::set_record: record length differs from the check count.");
    }
    for (size_t i = 0; i < columns_.size(); i++) {
        columns_[i].set(shot, bits.get(i));
    }
}

ShotSet ShotSet::concat(const ShotSet &a, const ShotSet &b) {
    if (a.num_checks() != b.num_checks()) {
        throw std::invalid_argument("ShotSet::concat: check counts differ.");
    }
    ShotSet out(a.num_checks(), a.shots_ + b.shots_);
    for (size_t i = 0; i < a.num_checks(); i++) {
        out.columns_[i].assign_slice(0, a.columns_[i]);
        out.columns_[i].assign_slice(a.shots_, b.columns_[i]);
    }
    return out;
}

ShotSet sample_shots(const FaultModel &model, size_t shots, uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample_shots: shots must be at least 1.");
    }
    std::vector<double> q;
    for (const auto &g : model.generators()) {
        q.push_back(g.q);
    }
    FaultSampler sampler(std::move(q));
    const size_t M = model.code().num_meas();
    ShotSet out(M, shots);
    size_t blocks = (shots + kShotsPerBlock - 1) / kShotsPerBlock;
    parallel::parallel_for(blocks, [&](size_t b) {
        size_t begin = b * kShotsPerBlock;
        size_t end = std::min(shots, begin + kShotsPerBlock);
        gf2::BitVec syn(M);
        for (size_t s = begin; s < end; s++) {
            syn.clear();
            sampler.fire(seed, s, [&](size_t i) { syn ^= model.syndrome(i); });
            for (size_t i : syn.ones()) {
                out.column(i).set(s);
            }
        }
    });
    return out;
}

EigenvalueEstimate estimate_eigenvalue(const ShotSet &shots, const gf2::BitVec &mu) {
    if (shots.num_shots() == 0) {
        throw std::invalid_argument("estimate_eigenvalue: empty shot set.");
    }
    if (mu.size() != shots.num_checks()) {
        throw std::invalid_argument("estimate_eigenvalue: mu length differs from the check count.");
    }
    const auto &k = kernels::active();
    std::vector<size_t> sel = mu.ones();
    uint64_t odd = 0;
    if (sel.size() == 1) {
        odd = shots.column(sel[0]).popcount();
    } else if (sel.size() == 2) {
        const auto &a = shots.column(sel[0]);
        odd = k.xor_popcount(a.words().data(), shots.column(sel[1]).words().data(), a.num_words());
    } else if (!sel.empty()) {
        gf2::BitVec acc = shots.column(sel[0]);
        for (size_t j = 1; j < sel.size(); j++) {
            acc ^= shots.column(sel[j]);
        }
        odd = acc.popcount();
    }
    EigenvalueEstimate e;
    e.mu = mu;
    e.shots = shots.num_shots();
    double n = static_cast<double>(e.shots);
    e.lambda_hat = (n - 2.0 * static_cast<double>(odd)) / n;
    e.bern_rate = static_cast<double>(odd) / n;
    return e;
}

std::vector<EigenvalueEstimate> estimate_eigenvalues(const ShotSet &shots, const std::vector<gf2::BitVec> &mus) {
    std::vector<EigenvalueEstimate> out(mus.size());
    parallel::parallel_for(mus.size(), [&](size_t i) { out[i] = estimate_eigenvalue(shots, mus[i]); });
    return out;
}

SpacetimePauli meas_product(const SpacetimeCode &code, const gf2::BitVec &mu) {
    if (mu.size() != code.num_meas()) {
        throw std::invalid_argument("meas_product: mu length differs from the measurement generator count.");
    }
    SpacetimePauli out(code.layout());
    for (size_t i : mu.ones()) {
        out *= code.meas_gens()[i];
    }
    return out;
}

uint64_t shots_for_precision(double eps_guess, double tau, double delta) {
    if (!(eps_guess > 0 && eps_guess < 0.5)) {
        throw std::domain_error("shots_for_precision: eps_guess must be in (0, 1/2).");
    }
    if (!(tau > 0 && tau < 1)) {
        throw std::domain_error("shots_for_precision: tau must be in (0, 1).");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::domain_error("shots_for_precision: delta must be in (0, 1).");
    }
    return static_cast<uint64_t>(std::ceil(12.0 / (eps_guess * tau * tau) * std::log(1.0 / delta)));
}

}  // namespace synlearn
