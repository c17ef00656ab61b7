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

#ifndef SYNLEARN_LEP_LEP_H
#define SYNLEARN_LEP_LEP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "synlearn/faults/fault_model.h"
#include "synlearn/lep/decoder.h"

namespace synlearn {

/// Default truncation order for predict_lep.
constexpr size_t kDefaultMaxOrder = 4;

/// Rest-frame failure test: residual * l lies in the gauge group.
/// residual must have zero syndrome for the answer to mean "logical flip".
bool fails_rest_frame(const SpacetimeCode &code, const SpacetimePauli &residual, const SpacetimePauli &l);

/// Terminal-frame failure test: the forward-propagated terminal Pauli of
/// residual, times the base-code logical that l was transported from, lies in
/// the base stabilizer group. base_logical is that base-code representative.
bool fails_terminal_frame(const SpacetimeCode &code, const SpacetimePauli &residual, const PauliString &base_logical);

/// Failure test through logical signatures, valid for zero-syndrome residuals.
bool fails_by_signature(const SpacetimeCode &code, const SpacetimePauli &residual, const SpacetimePauli &l);

struct LepPrediction {
    double value = 0;
    /// Upper bound on the absolute mass of subsets above the order.
    double residual_bound = 0;
    size_t order = 0;
};

/// Sum over class subsets J with |J| <= max_order of
/// prod_{c in J} q_c prod_{c not in J} (1 - q_c), restricted to subsets whose
/// representative product, corrected by the decoder, lands in l's gauge
/// coset. Uses the representative of each class; when the model is not
/// learnable up to logical equivalence that choice affects the result.
/// Throws std::invalid_argument when l is not in the gauge commutant.
LepPrediction predict_lep(
    const PriorDistribution &prior,
    const FaultModel &model,
    const DecoderTable &dec,
    const SpacetimePauli &l,
    size_t max_order = kDefaultMaxOrder);

/// Same sum with an explicit coefficient vector (one entry per class), for
/// plugging in recovered estimates.
LepPrediction predict_lep(
    const PriorDistribution &prior,
    const std::vector<double> &q,
    const FaultModel &model,
    const DecoderTable &dec,
    const SpacetimePauli &l,
    size_t max_order = kDefaultMaxOrder);

/// Largest generator count exact_lep accepts.
constexpr size_t kExactLepMaxGenerators = 20;

/// Exact LEP by enumerating every subset of the model's generators.
/// Throws std::length_error beyond kExactLepMaxGenerators.
double exact_lep(const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l);

/// Largest (syndrome, signature) bit count exact_lep_dense accepts.
constexpr size_t kExactLepDenseMaxBits = 24;

/// Exact LEP by convolving the distribution of (syndrome, logical signature)
/// over generators. Agrees with exact_lep but scales with 2^(M + 2k) rather
/// than 2^K. Throws std::length_error beyond kExactLepDenseMaxBits.
double exact_lep_dense(const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l);

struct LepSample {
    double rate = 0;
    /// Wilson 95% interval.
    double ci_low = 0;
    double ci_high = 0;
    uint64_t failures = 0;
    uint64_t shots = 0;
};

/// Wilson score interval at z = 1.959964.
void wilson_interval(uint64_t failures, uint64_t shots, double &low, double &high);

/// Monte Carlo LEP. Identical for any thread count. Throws as the sampler.
LepSample sample_lep(
    const FaultModel &model, const DecoderTable &dec, const SpacetimePauli &l, uint64_t shots, uint64_t seed);

struct LogicalReport {
    std::string logical;
    double p_L_predicted = 0;
    std::optional<double> p_L_true;
    std::optional<LepSample> p_L_sampled;
    size_t truncation_order = 0;
    double truncation_residual_bound = 0;
};

}  // namespace synlearn

#endif
