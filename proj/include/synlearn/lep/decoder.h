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

#ifndef SYNLEARN_LEP_DECODER_H
#define SYNLEARN_LEP_DECODER_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "synlearn/faults/fault_model.h"

namespace synlearn {

/// Open-addressing hash map from fixed-width syndrome words to uint32 values.
/// Linear probing, power-of-two capacity, no deletion.
class FlatSyndromeMap {
   public:
    static constexpr uint32_t kEmpty = UINT32_MAX;

    explicit FlatSyndromeMap(size_t words_per_key = 1, size_t expected = 16);

    /// Value for key, or kEmpty.
    uint32_t find(const uint64_t *key) const;
    /// Inserts when absent. Returns true iff inserted.
    bool insert(const uint64_t *key, uint32_t value);
    size_t size() const noexcept {
        return size_;
    }

   private:
    size_t slot_of(const uint64_t *key) const;
    void grow();

    size_t stride_;
    size_t mask_ = 0;
    size_t size_ = 0;
    std::vector<uint64_t> keys_;
    std::vector<uint32_t> values_;
};

/// Syndrome-to-correction lookup decoder over prior-class representatives.
///
/// For every syndrome reachable by at most max_weight representatives the
/// correction is the smallest such set, ties going to the lexicographically
/// first class-index combination. Other syndromes are resolved on first use
/// by a GF(2) solve (any solution, flagged non-minimal) and cached; decode is
/// safe to call from several threads.
class DecoderTable {
   public:
    struct View {
        std::span<const uint32_t> classes;
        /// Logical signature of the correction.
        std::span<const uint64_t> signature;
        bool minimal = true;
    };

    size_t max_weight() const noexcept {
        return max_weight_;
    }
    size_t table_size() const noexcept {
        return map_.size();
    }
    size_t lazy_size() const;
    size_t syndrome_words() const noexcept {
        return syn_words_;
    }
    size_t signature_words() const noexcept {
        return sig_words_;
    }

    /// Throws std::runtime_error if the syndrome is outside the span of the
    /// class syndromes.
    View decode(const gf2::BitVec &syndrome) const;
    View decode_words(const uint64_t *syndrome) const;
    /// Product of the representatives chosen for syndrome.
    SpacetimePauli correction(const gf2::BitVec &syndrome) const;

    friend DecoderTable build_decoder(
        const FaultModel &model, const PriorDistribution &prior, size_t max_weight, size_t max_entries);

    DecoderTable(DecoderTable &&) = default;
    DecoderTable &operator=(DecoderTable &&) = default;

   private:
    DecoderTable() = default;
    View lazy_decode(const uint64_t *syndrome) const;

    struct Lazy {
        std::vector<uint32_t> classes;
        std::vector<uint64_t> signature;
    };

    size_t M_ = 0;
    size_t sig_bits_ = 0;
    size_t syn_words_ = 0;
    size_t sig_words_ = 0;
    size_t max_weight_ = 0;
    SpacetimeLayout layout_;
    std::vector<SpacetimePauli> reps_;
    std::vector<gf2::BitVec> class_syndromes_;
    std::vector<gf2::BitVec> class_signatures_;
    gf2::BitMatrix check_matrix_;  // M x K, column c = syndrome of class c

    FlatSyndromeMap map_;
    std::vector<uint32_t> entry_offset_;
    std::vector<uint32_t> entry_classes_;
    std::vector<uint64_t> entry_sigs_;

    mutable std::unique_ptr<std::mutex> lazy_mutex_ = std::make_unique<std::mutex>();
    mutable std::unordered_map<gf2::BitVec, std::unique_ptr<Lazy>, gf2::BitVecHash> lazy_;
};

/// Builds the table. The effective weight is the largest w <= max_weight
/// whose combination count stays within max_entries. Throws
/// std::invalid_argument when max_weight == 0.
DecoderTable build_decoder(
    const FaultModel &model, const PriorDistribution &prior, size_t max_weight, size_t max_entries = size_t{1} << 22);

}  // namespace synlearn

#endif
