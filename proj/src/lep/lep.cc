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

#include "synlearn/lep/lep.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "synlearn/sampler/sampler.h"
#include "synlearn/util/parallel.h"

namespace synlearn {

namespace {

// Fixed-shape pairwise reduction so the sum does not depend on scheduling.
double pairwise_sum(std::span<const double> v) {
    if (v.empty()) {
        return 0;
    }
    if (v.size() == 1) {
        return v[0];
    }
    size_t h = v.size() / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

// Row-major packing of per-item syndromes and signatures into flat words.
struct Packed {
    size_t syn_words = 0;
    size_t sig_words = 0;
    std::vector<uint64_t> syn;
    std::vector<uint64_t> sig;

    const uint64_t *syn_of(size_t i) const {
        return syn.data() + i * syn_words;
    }
    const uint64_t *sig_of(size_t i) const {
        return sig.data() + i * sig_words;
    }
};

void append_words(std::vector<uint64_t> &dst, const gf2::BitVec &v, size_t words) {
    auto w = v.words();
    for (size_t i = 0; i < words; i++) {
        dst.push_back(i < w.size() ? w[i] : 0);
    }
}

std::vector<uint64_t> padded(const gf2::BitVec &v, size_t words) {
    std::vector<uint64_t> out;
    append_words(out, v, words);
    return out;
}

inline void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

// Residual signature (fault signature xor correction signature) equals l's.
inline bool signature_fails(
    const DecoderTable &dec, const uint64_t *syn, const uint64_t *sig, const std::vector<uint64_t> &target) {
    auto v = dec.decode_words(syn);
    for (size_t i = 0; i < target.size(); i++) {
        if ((sig[i] ^ v.signature[i]) != target[i]) {
            return false;
        }
    }
    return true;
}

void require_logical(const SpacetimeCode &code, const SpacetimePauli &l, const char *who) {
    if (l.layout() != code.layout()) {
        throw std::invalid_argument(std::string(who) + ": logical has the wrong spacetime layout.");
    }
    if (!code.in_gauge_perp(l)) {
        throw std::invalid_argument(
            std::string(who) + ": " + l.to_string() + " is not in the gauge commutant, so it is not a bare logical.");
    }
}

void require_decoder(const FaultModel &model, const DecoderTable &dec, const char *who) {
    const SpacetimeCode &code = model.code();
    if (dec.syndrome_words() != std::max<size_t>(1, gf2::words_for(code.num_meas())) ||
        dec.signature_words() != std::max<size_t>(1, gf2::words_for(code.logical_gens().size()))) {
        throw std::invalid_argument(std::string(who) + ": decoder was built for a different code.");
    }
}

// Upper bound on sum over |J| > order of prod |q| prod |1 - q|, by the
// Poisson-binomial tail recursion on nonnegative weights.
double tail_bound(const std::vector<double> &q, size_t order) {
    if (order >= q.size()) {
        return 0;
    }
    std::vector<double> dp(order + 1, 0.0);
    dp[0] = 1;
    double tail = 0;
    for (double qc : q) {
        double a = std::abs(qc);
        double b = std::abs(1 - qc);
        tail = tail * (a + b) + dp[order] * a;
        for (size_t m = order; m > 0; m--) {
            dp[m] = dp[m] * b + dp[m - 1] * a;
        }
        dp[0] *= b;
    }
    return tail;
}

}  // namespace

bool fails_rest_frame(const SpacetimeCode &code, const SpacetimePauli &residual, const SpacetimePauli &l) {
    return code.in_gauge(residual * l);
}

bool fails_terminal_frame(const SpacetimeCode &code, const SpacetimePauli &residual, const PauliString &base_logical) {
    PauliString frame = terminal_frame(code.circuit(), residual);
    frame *= base_logical;
    return code.in_base_stabilizer(frame);
}

bool fails_by_signature(const SpacetimeCode &code, const SpacetimePauli &residual, const SpacetimePauli &l) {
    return code.logical_signature(residual) == code.logical_signature(l);
}

LepPrediction predict_lep(
    const PriorDistribution &prior,
    const FaultModel &model,
    const DecoderTable &dec,
    const SpacetimePauli &l,
    size_t max_order) {
    return predict_lep(prior, prior.coefficients(), model, dec, l, max_order);
}

LepPrediction predict_lep(
    const PriorDistribution &prior,
    const std::vector<double> &q,
    const FaultModel &model,
    const DecoderTable &dec,
    const SpacetimePauli &l,
    size_t max_order) {
    const SpacetimeCode &code = model.code();
    require_logical(code, l, "predict_lep");
    require_decoder(model, dec, "predict_lep");
    const size_t K = prior.size();
    if (q.size() != K) {
        throw std::invalid_argument(
            "predict_lep: " + std::to_string(q.size()) + " coefficients for " + std::to_string(K) + " classes.");
    }
    for (size_t c = 0; c < K; c++) {
        if (!std::isfinite(q[c]) || q[c] >= 1) {
            throw std::invalid_argument("predict_lep: class " + std::to_string(c) + " has coefficient outside (-inf, 1).");
        }
    }

    Packed p{dec.syndrome_words(), dec.signature_words(), {}, {}};
    std::vector<double> ratio(K);
    double p0 = 1;
    for (size_t c = 0; c < K; c++) {
        append_words(p.syn, prior.classes[c].syndrome, p.syn_words);
        append_words(p.sig, model.signature(prior.classes[c].representative), p.sig_words);
        ratio[c] = q[c] / (1 - q[c]);
        p0 *= 1 - q[c];
    }
    const std::vector<uint64_t> target = padded(code.logical_signature(l), p.sig_words);
    const size_t order = std::min(max_order, K);

    // Shard c holds subsets whose smallest class is c; shard K is the empty set.
    std::vector<double> partial(K + 1, 0.0);
    parallel::parallel_for(K + 1, [&](size_t shard) {
        std::vector<uint64_t> syn((order + 1) * p.syn_words, 0);
        std::vector<uint64_t> sig((order + 1) * p.sig_words, 0);
        if (shard == K) {
            partial[shard] = signature_fails(dec, syn.data(), sig.data(), target) ? p0 : 0;
            return;
        }
        if (order == 0) {
            return;
        }
        double sum = 0;
        // Depth d buffers hold the XOR of the d chosen classes.
        auto visit = [&](auto &&self, size_t next, size_t depth, double weight) -> void {
            const uint64_t *s = syn.data() + depth * p.syn_words;
            const uint64_t *g = sig.data() + depth * p.sig_words;
            if (signature_fails(dec, s, g, target)) {
                sum += weight;
            }
            if (depth == order) {
                return;
            }
            for (size_t c = next; c < K; c++) {
                uint64_t *s2 = syn.data() + (depth + 1) * p.syn_words;
                uint64_t *g2 = sig.data() + (depth + 1) * p.sig_words;
                std::copy_n(s, p.syn_words, s2);
                std::copy_n(g, p.sig_words, g2);
                xor_words(s2, p.syn_of(c), p.syn_words);
                xor_words(g2, p.sig_of(c), p.sig_words);
                self(self, c + 1, depth + 1, weight * ratio[c]);
            }
        };
        std::copy_n(p.syn_of(shard), p.syn_words, syn.data() + p.syn_words);
        std::copy_n(p.sig_of(shard), p.sig_words, sig.data() + p.sig_words);
        visit(visit, shard + 1, 1, p0 * ratio[shard]);
        partial[shard] = sum;
    });

    LepPrediction out;
    out.value = pairwise_sum(partial);
    out.residual_bound = tail_bound(q, order);
    out.order = order;
    return out;
}

double exact_lep(const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l) {
    const SpacetimeCode &code = model.code();
    require_logical(code, l, "exact_lep");
    require_decoder(model, dec, "exact_lep");
    const size_t K = model.size();
    if (K > kExactLepMaxGenerators) {
        throw std::length_error(
            "exact_lep: " + std::to_string(K) + " generators exceed the enumeration guard of 2^" +
            std::to_string(kExactLepMaxGenerators) + " subsets.");
    }
    Packed p{dec.syndrome_words(), dec.signature_words(), {}, {}};
    for (size_t i = 0; i < K; i++) {
        append_words(p.syn, model.syndrome(i), p.syn_words);
        append_words(p.sig, model.signature(i), p.sig_words);
    }
    const std::vector<uint64_t> target = padded(code.logical_signature(l), p.sig_words);

    // Low bits are walked in Gray-code order inside a block; high bits pick
    // the block. Subset weights come from two product tables.
    const size_t low = std::min<size_t>(K, 12);
    const size_t high = K - low;
    auto weights = [&](size_t offset, size_t count) {
        std::vector<double> w(size_t{1} << count, 1.0);
        for (size_t mask = 0; mask < w.size(); mask++) {
            for (size_t b = 0; b < count; b++) {
                double q = model.generators()[offset + b].q;
                w[mask] *= (mask >> b) & 1 ? q : 1 - q;
            }
        }
        return w;
    };
    const std::vector<double> w_low = weights(0, low);
    const std::vector<double> w_high = weights(low, high);

    std::vector<double> partial(w_high.size(), 0.0);
    parallel::parallel_for(w_high.size(), [&](size_t hi) {
        std::vector<uint64_t> syn(p.syn_words, 0);
        std::vector<uint64_t> sig(p.sig_words, 0);
        for (size_t b = 0; b < high; b++) {
            if ((hi >> b) & 1) {
                xor_words(syn.data(), p.syn_of(low + b), p.syn_words);
                xor_words(sig.data(), p.sig_of(low + b), p.sig_words);
            }
        }
        double sum = 0;
        size_t gray = 0;
        for (size_t step = 0; step < w_low.size(); step++) {
            if (step > 0) {
                size_t bit = static_cast<size_t>(__builtin_ctzll(step));
                gray ^= size_t{1} << bit;
                xor_words(syn.data(), p.syn_of(bit), p.syn_words);
                xor_words(sig.data(), p.sig_of(bit), p.sig_words);
            }
            if (signature_fails(dec, syn.data(), sig.data(), target)) {
                sum += w_low[gray];
            }
        }
        partial[hi] = sum * w_high[hi];
    });
    return pairwise_sum(partial);
}

double exact_lep_dense(const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l) {
    const SpacetimeCode &code = model.code();
    require_logical(code, l, "exact_lep_dense");
    require_decoder(model, dec, "exact_lep_dense");
    const size_t M = code.num_meas();
    const size_t L = code.logical_gens().size();
    if (M + L > kExactLepDenseMaxBits) {
        throw std::length_error(
            "exact_lep_dense: " + std::to_string(M + L) + " syndrome and signature bits exceed the guard of " +
            std::to_string(kExactLepDenseMaxBits) + ".");
    }
    auto pack = [&](const gf2::BitVec &syn, const gf2::BitVec &sig) {
        uint64_t s = 0;
        for (size_t i : syn.ones()) {
            s |= uint64_t{1} << i;
        }
        for (size_t i : sig.ones()) {
            s |= uint64_t{1} << (M + i);
        }
        return s;
    };

    std::vector<double> dist(size_t{1} << (M + L), 0.0);
    dist[0] = 1;
    for (size_t g = 0; g < model.size(); g++) {
        const uint64_t v = pack(model.syndrome(g), model.signature(g));
        if (v == 0) {
            continue;
        }
        const double q = model.generators()[g].q;
        const uint64_t top = uint64_t{1} << (63 - __builtin_clzll(v));
        for (uint64_t s = 0; s < dist.size(); s++) {
            if (s & top) {
                continue;
            }
            double a = dist[s];
            double b = dist[s ^ v];
            dist[s] = (1 - q) * a + q * b;
            dist[s ^ v] = (1 - q) * b + q * a;
        }
    }

    const uint64_t target = pack(gf2::BitVec(M), code.logical_signature(l)) >> M;
    const uint64_t syn_mask = (uint64_t{1} << M) - 1;
    std::vector<double> by_block(std::max<size_t>(1, dist.size() >> M), 0.0);
    for (uint64_t s = 0; s < dist.size(); s++) {
        if (dist[s] == 0) {
            continue;
        }
        uint64_t syn_word = s & syn_mask;
        auto view = dec.decode_words(&syn_word);
        uint64_t corr = view.signature.empty() ? 0 : view.signature[0];
        if (((s >> M) ^ corr) == target) {
            by_block[s >> M] += dist[s];
        }
    }
    return pairwise_sum(by_block);
}

void wilson_interval(uint64_t failures, uint64_t shots, double &low, double &high) {
    if (shots == 0) {
        low = 0;
        high = 1;
        return;
    }
    constexpr double z = 1.959964;
    const double n = static_cast<double>(shots);
    const double ph = static_cast<double>(failures) / n;
    const double denom = 1 + z * z / n;
    const double center = (ph + z * z / (2 * n)) / denom;
    const double half = z / denom * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n));
    low = std::max(0.0, center - half);
    high = std::min(1.0, center + half);
}

LepSample sample_lep(
    const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l, uint64_t shots, uint64_t seed) {
    const SpacetimeCode &code = model.code();
    require_logical(code, l, "sample_lep");
    require_decoder(model, dec, "sample_lep");
    if (shots == 0) {
        throw std::invalid_argument("sample_lep: shots must be positive.");
    }
    std::vector<double> q;
    Packed p{dec.syndrome_words(), dec.signature_words(), {}, {}};
    for (size_t i = 0; i < model.size(); i++) {
        q.push_back(model.generators()[i].q);
        append_words(p.syn, model.syndrome(i), p.syn_words);
        append_words(p.sig, model.signature(i), p.sig_words);
    }
    const FaultSampler sampler(std::move(q));
    const std::vector<uint64_t> target = padded(code.logical_signature(l), p.sig_words);

    constexpr uint64_t kBlock = 16384;
    const size_t blocks = static_cast<size_t>((shots + kBlock - 1) / kBlock);
    std::vector<uint64_t> fails(blocks, 0);
    parallel::parallel_for(blocks, [&](size_t b) {
        std::vector<uint64_t> syn(p.syn_words);
        std::vector<uint64_t> sig(p.sig_words);
        const uint64_t end = std::min<uint64_t>(shots, (b + 1) * kBlock);
        uint64_t count = 0;
        for (uint64_t shot = b * kBlock; shot < end; shot++) {
            std::fill(syn.begin(), syn.end(), 0);
            std::fill(sig.begin(), sig.end(), 0);
            sampler.fire(seed, shot, [&](size_t i) {
                xor_words(syn.data(), p.syn_of(i), p.syn_words);
                xor_words(sig.data(), p.sig_of(i), p.sig_words);
            });
            count += signature_fails(dec, syn.data(), sig.data(), target);
        }
        fails[b] = count;
    });

    LepSample out;
    out.shots = shots;
    for (uint64_t f : fails) {
        out.failures += f;
    }
    out.rate = static_cast<double>(out.failures) / static_cast<double>(shots);
    wilson_interval(out.failures, shots, out.ci_low, out.ci_high);
    return out;
}

}  // namespace synlearn
