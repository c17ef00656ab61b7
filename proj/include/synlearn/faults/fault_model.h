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

#ifndef SYNLEARN_FAULTS_FAULT_MODEL_H
#define SYNLEARN_FAULTS_FAULT_MODEL_H

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "synlearn/gf2/bitvec.h"
#include "synlearn/spacetime/spacetime_code.h"

namespace synlearn {

/// One factor (1 - q) + q chi_a of a Pauli-Lindblad channel.
struct FaultGenerator {
    SpacetimePauli support;
    double q = 0;
    std::string label;
};

/// Fault model over a spacetime code, in the character basis.
///
/// Construction rejects identity or duplicate supports and any q with
/// 1 - 2q <= 0 (all eigenvalues must stay positive). Negative q is allowed;
/// such models can be analyzed but not sampled. Syndromes and logical
/// signatures of the supports are computed once.
class FaultModel {
   public:
    FaultModel(std::shared_ptr<const SpacetimeCode> code, std::vector<FaultGenerator> generators);

    const SpacetimeCode &code() const noexcept {
        return *code_;
    }
    std::shared_ptr<const SpacetimeCode> code_ptr() const noexcept {
        return code_;
    }
    const std::vector<FaultGenerator> &generators() const noexcept {
        return generators_;
    }
    size_t size() const noexcept {
        return generators_.size();
    }
    const gf2::BitVec &syndrome(size_t i) const {
        return syndromes_[i];
    }
    const gf2::BitVec &signature(size_t i) const {
        return signatures_[i];
    }
    bool sampleable() const;

    /// Same supports with new coefficients (validated again).
    FaultModel with_coefficients(const std::vector<double> &q) const;

   private:
    std::shared_ptr<const SpacetimeCode> code_;
    std::vector<FaultGenerator> generators_;
    std::vector<gf2::BitVec> syndromes_;
    std::vector<gf2::BitVec> signatures_;
};

/// lambda_b = product over generators anticommuting with b of (1 - 2 q_a).
double eigenvalue(const FaultModel &model, const SpacetimePauli &b);

/// Exact distribution of the composite fault, over the span of the supports.
struct DenseDistribution {
    std::vector<SpacetimePauli> elements;
    std::vector<double> probs;

    double probability_of(const SpacetimePauli &a) const;
};

/// Expands the convolution exactly. Throws std::length_error when the span
/// of the supports has more than 2^22 elements.
DenseDistribution error_rates_dense(const FaultModel &model);

struct PriorClass {
    /// Index of the first generator (declaration order) with this syndrome.
    size_t representative = 0;
    std::vector<size_t> members;
    gf2::BitVec syndrome;
    /// (1 - prod over members of (1 - 2 q)) / 2.
    double q = 0;
};

struct PriorDistribution {
    std::vector<PriorClass> classes;

    size_t size() const noexcept {
        return classes.size();
    }
    std::vector<double> coefficients() const;
};

/// Groups generators by syndrome, classes ordered by first appearance.
/// Throws std::invalid_argument naming any generator with zero syndrome.
PriorDistribution build_prior(const FaultModel &model);

/// Probability mass of the gauge coset of a, summed over fault subsets of
/// size at most max_order. Exact when max_order >= model.size().
/// Throws std::invalid_argument when max_order == 0.
double effective_rate(const FaultModel &model, const SpacetimePauli &a, size_t max_order);

}  // namespace synlearn

#endif
