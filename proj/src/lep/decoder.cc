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

#include "synlearn/lep/decoder.h"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace synlearn {

namespace {

inline uint64_t mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

uint64_t binomial_capped(size_t n, size_t k, uint64_t cap) {
    if (k > n) {
        return 0;
    }
    long double r = 1;
    for (size_t i = 1; i <= k; i++) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (r > static_cast<long double>(cap)) {
            return cap + 1;
        }
    }
    return static_cast<uint64_t>(r + 0.5L);
}

}  // namespace

FlatSyndromeMap::FlatSyndromeMap(size_t words_per_key, size_t expected) : stride_(std::max<size_t>(1, words_per_key)) {
    size_t cap = 16;
    while (cap < 2 * expected) {
        cap <<= 1;
    }
    mask_ = cap - 1;
    keys_.assign(cap * stride_, 0);
    values_.assign(cap, kEmpty);
}

size_t FlatSyndromeMap::slot_of(const uint64_t *key) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (size_t i = 0; i < stride_; i++) {
        h = mix(h ^ key[i]);
    }
    return static_cast<size_t>(h) & mask_;
}

uint32_t FlatSyndromeMap::find(const uint64_t *key) const {
    for (size_t s = slot_of(key);; s = (s + 1) & mask_) {
        if (values_[s] == kEmpty) {
            return kEmpty;
        }
        if (std::memcmp(&keys_[s * stride_], key, stride_ * sizeof(uint64_t)) == 0) {
            return values_[s];
        }
    }
}

bool FlatSyndromeMap::insert(const uint64_t *key, uint32_t value) {
    if (2 * (size_ + 1) > values_.size()) {
        grow();
    }
    for (size_t s = slot_of(key);; s = (s + 1) & mask_) {
        if (values_[s] == kEmpty) {
            std::memcpy(&keys_[s * stride_], key, stride_ * sizeof(uint64_t));
            values_[s] = value;
            size_++;
            return true;
        }
        if (std::memcmp(&keys_[s * stride_], key, stride_ * sizeof(uint64_t)) == 0) {
            return false;
        }
    }
}

void FlatSyndromeMap::grow() {
    std::vector<uint64_t> old_keys = std::move(keys_);
    std::vector<uint32_t> old_values = std::move(values_);
    size_t cap = old_values.size() * 2;
    mask_ = cap - 1;
    keys_.assign(cap * stride_, 0);
    values_.assign(cap, kEmpty);
    size_ = 0;
    for (size_t s = 0; s < old_values.size(); s++) {
        if (old_values[s] != kEmpty) {
            insert(&old_keys[s * stride_], old_values[s]);
        }
    }
}

DecoderTable build_decoder(
    const FaultModel &model, const PriorDistribution &prior, size_t max_weight, size_t max_entries) {
    if (max_weight == 0) {
        throw std::invalid_argument("build_decoder: max_weight must be at least 1.");
    }
    const SpacetimeCode &code = model.code();
    DecoderTable d;
    d.M_ = code.num_meas();
    d.sig_bits_ = code.logical_gens().size();
    d.syn_words_ = std::max<size_t>(1, gf2::words_for(d.M_));
    d.sig_words_ = std::max<size_t>(1, gf2::words_for(d.sig_bits_));
    d.layout_ = code.layout();
    const size_t K = prior.size();
    d.check_matrix_ = gf2::BitMatrix(d.M_, K);
    for (size_t c = 0; c < K; c++) {
        const auto &cls = prior.classes[c];
        d.reps_.push_back(model.generators()[cls.representative].support);
        d.class_syndromes_.push_back(cls.syndrome);
        d.class_signatures_.push_back(model.signature(cls.representative));
        for (size_t i : cls.syndrome.ones()) {
            d.check_matrix_.set(i, c);
        }
    }

    uint64_t total = 0;
    size_t w = 0;
    for (size_t cand = 0; cand <= std::min(max_weight, K); cand++) {
        total += binomial_capped(K, cand, max_entries);
        if (total > max_entries) {
            break;
        }
        w = cand;
    }
    d.max_weight_ = std::max<size_t>(w, 1);

    d.map_ = FlatSyndromeMap(d.syn_words_, static_cast<size_t>(std::min<uint64_t>(total, max_entries)));
    std::vector<uint64_t> syn(d.syn_words_);
    std::vector<uint64_t> sig(d.sig_words_);
    auto add = [&](const std::vector<uint32_t> &combo) {
        std::fill(syn.begin(), syn.end(), 0);
        std::fill(sig.begin(), sig.end(), 0);
        for (uint32_t c : combo) {
            const auto sw = d.class_syndromes_[c].words();
            for (size_t i = 0; i < sw.size(); i++) {
                syn[i] ^= sw[i];
            }
            const auto gw = d.class_signatures_[c].words();
            for (size_t i = 0; i < gw.size(); i++) {
                sig[i] ^= gw[i];
            }
        }
        uint32_t id = static_cast<uint32_t>(d.entry_offset_.size());
        if (d.map_.insert(syn.data(), id)) {
            d.entry_offset_.push_back(static_cast<uint32_t>(d.entry_classes_.size()));
            d.entry_classes_.insert(d.entry_classes_.end(), combo.begin(), combo.end());
            d.entry_sigs_.insert(d.entry_sigs_.end(), sig.begin(), sig.end());
        }
    };
    for (size_t weight = 0; weight <= d.max_weight_ && weight <= K; weight++) {
        std::vector<uint32_t> combo(weight);
        for (size_t i = 0; i < weight; i++) {
            combo[i] = static_cast<uint32_t>(i);
        }
        while (true) {
            add(combo);
            // Next combination in lexicographic order.
            size_t i = weight;
            while (i > 0 && combo[i - 1] == K - weight + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            combo[i - 1]++;
            for (size_t j = i; j < weight; j++) {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    d.entry_offset_.push_back(static_cast<uint32_t>(d.entry_classes_.size()));
    return d;
}

size_t DecoderTable::lazy_size() const {
    std::lock_guard<std::mutex> lock(*lazy_mutex_);
    return lazy_.size();
}

DecoderTable::View DecoderTable::decode_words(const uint64_t *syndrome) const {
    uint32_t id = map_.find(syndrome);
    if (id != FlatSyndromeMap::kEmpty) {
        View v;
        v.classes = {entry_classes_.data() + entry_offset_[id], entry_offset_[id + 1] - entry_offset_[id]};
        v.signature = {entry_sigs_.data() + id * sig_words_, sig_words_};
        v.minimal = true;
        return v;
    }
    return lazy_decode(syndrome);
}

DecoderTable::View DecoderTable::decode(const gf2::BitVec &syndrome) const {
    if (syndrome.size() != M_) {
        throw std::invalid_argument("DecoderTable::decode: syndrome length differs from M.");
    }
    if (M_ == 0) {
        uint64_t zero = 0;
        return decode_words(&zero);
    }
    return decode_words(syndrome.words().data());
}

DecoderTable::View DecoderTable::lazy_decode(const uint64_t *syndrome) const {
    gf2::BitVec key(M_);
    std::copy_n(syndrome, gf2::words_for(M_), key.words().begin());
    std::lock_guard<std::mutex> lock(*lazy_mutex_);
    auto it = lazy_.find(key);
    if (it == lazy_.end()) {
        std::optional<gf2::BitVec> x = gf2::solve(check_matrix_, key);
        if (!x) {
            throw std::runtime_error(
                "DecoderTable: syndrome " + key.to_string() + " is not produced by any combination of fault classes.");
        }
        auto entry = std::make_unique<Lazy>();
        gf2::BitVec sig(sig_bits_);
        for (size_t c : x->ones()) {
            entry->classes.push_back(static_cast<uint32_t>(c));
            sig ^= class_signatures_[c];
        }
        entry->signature.assign(sig.words().begin(), sig.words().end());
        entry->signature.resize(sig_words_, 0);
        it = lazy_.emplace(std::move(key), std::move(entry)).first;
    }
    View v;
    v.classes = it->second->classes;
    v.signature = it->second->signature;
    v.minimal = false;
    return v;
}

SpacetimePauli DecoderTable::correction(const gf2::BitVec &syndrome) const {
    View v = decode(syndrome);
    SpacetimePauli out(layout_);
    for (uint32_t c : v.classes) {
        out *= reps_[c];
    }
    return out;
}

}  // namespace synlearn
