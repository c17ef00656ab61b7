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

#ifndef SYNLEARN_EXPERIMENTS_EXPERIMENTS_H
#define SYNLEARN_EXPERIMENTS_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synlearn/experiments/fit.h"
#include "synlearn/faults/fault_io.h"
#include "synlearn/lep/lep.h"

namespace synlearn {

enum class ExperimentKind { kAccuracyVsShots, kShotsVsP, kLepComparison };

const char *experiment_kind_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

/// Experiment configuration, read from JSON:
///
///   {"name": "acc_rep3", "kind": "accuracy_vs_shots",
///    "instance": "circuits/rep_d3_r3.json",  (or "builtin:repetition:3:3")
///    "template": "bitflip", "p_grid": [5e-4], "shot_grid": [1e4, 3e4],
///    "trials": 30, "seed": 1, "tau_target": 0.5, "max_order": 4,
///    "q_rows": 0, "logical": 0, "rel_err_target": 0.1, "decoder_weight": 4}
///
/// q_rows = 0 means the estimator default. Relative instance paths resolve
/// against base_dir.
struct ExperimentConfig {
    std::string name = "experiment";
    ExperimentKind kind = ExperimentKind::kAccuracyVsShots;
    std::string instance;
    TemplateKind fault_template = TemplateKind::kBitflip;
    std::vector<double> p_grid;
    std::vector<uint64_t> shot_grid;
    size_t trials = 10;
    uint64_t seed = 1;
    double tau_target = 0.5;
    size_t max_order = kDefaultMaxOrder;
    size_t q_rows = 0;
    size_t logical = 0;
    double rel_err_target = 0.1;
    size_t decoder_weight = 4;
    std::string base_dir = ".";

    /// Throws std::invalid_argument on empty grids, trials == 0 or
    /// out-of-range values.
    void validate() const;
};

ExperimentConfig parse_experiment_config(std::string_view text, const std::string &base_dir = ".");
ExperimentConfig load_experiment_config(const std::string &path);
std::string experiment_config_to_json(const ExperimentConfig &cfg);

/// Circuit plus fault template. Builtins are "builtin:repetition:d:rounds",
/// "builtin:surface:d:rounds" and "builtin:bacon_shor:m".
struct ExperimentInstance {
    std::string name;
    std::shared_ptr<const SpacetimeCode> code;
    std::vector<TemplateEntry> entries;
};

ExperimentInstance load_instance(const ExperimentConfig &cfg);
ExperimentInstance make_instance(const std::string &name, const CircuitSpec &circuit, TemplateKind kind);

/// Deterministic per-trial seed from the base seed and grid coordinates.
uint64_t trial_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t trial);

struct PriorTrial {
    /// max over classes of |q_bar - q| / |q|.
    double tau = 0;
    std::vector<double> q_bar;
    std::vector<double> q_true;
    double delta_hat = 0;
};

/// One sample -> estimate -> recover pass. Rows with a nonpositive
/// eigenvalue estimate are clamped to 1 / shots (tainting is not an error
/// here; at the shot counts used the clamp never triggers in practice).
PriorTrial run_prior_trial(
    const FaultModel &model, const PriorDistribution &prior, uint64_t shots, size_t q_rows, uint64_t seed);

struct AccuracyPoint {
    double p = 0;
    uint64_t shots = 0;
    size_t trials = 0;
    uint64_t seed = 0;
    double tau_median = 0;
    double tau_q25 = 0;
    double tau_q75 = 0;
    std::vector<double> taus;
};

struct ShotsPoint {
    double p = 0;
    /// Interpolated shot count, absent when the target is not bracketed.
    std::optional<double> shots_needed;
};

struct LepPoint {
    double p = 0;
    uint64_t shots = 0;
    size_t trials = 0;
    uint64_t seed = 0;
    double predicted_mean = 0;
    double predicted_std = 0;
    double sampled_mean = 0;
    double sampled_std = 0;
    /// sqrt((1 - p_L) / (p_L N)) for the true p_L.
    double binomial_rel_err = 0;
};

struct ScalingResult {
    ExperimentKind kind = ExperimentKind::kAccuracyVsShots;
    std::string name;
    std::string instance;
    std::vector<AccuracyPoint> accuracy;
    std::vector<ShotsPoint> shots_needed;
    std::vector<LepPoint> lep;
    /// Main fit: tau median vs N, shots needed vs p, or (for LEP) unused.
    std::optional<stats::LinearFit> fit;

    // LEP comparison only.
    double p_true = 0;
    std::string p_true_method;
    double residual_bound = 0;
    std::optional<stats::LinearFit> fit_sampled;
    std::optional<stats::LinearFit> fit_predicted;
    std::optional<double> shots_sampled;
    std::optional<double> shots_predicted;
    std::optional<double> ratio;

    std::vector<std::string> notes;
};

/// tau distributions over the shot grid at the first p, with a log-log fit of
/// the medians (expected slope -1/2).
ScalingResult run_accuracy_vs_shots(const ExperimentInstance &inst, const ExperimentConfig &cfg);
/// Shots needed for median tau <= tau_target at each p, interpolated on the
/// log-log median curve, with a power-law fit (expected exponent -1).
/// Unreachable points are dropped and noted.
ScalingResult run_shots_vs_p(const ExperimentInstance &inst, const ExperimentConfig &cfg);
/// Sampled vs predicted LEP at the first p: relative std across trials
/// against the exact value, fitted log-log and solved for rel_err_target.
ScalingResult run_lep_comparison(const ExperimentInstance &inst, const ExperimentConfig &cfg);
ScalingResult run_experiment(const ExperimentConfig &cfg);

/// Reference LEP: dense convolution when the state space allows, subset
/// enumeration when K is small, else truncated prediction at the model's own
/// coefficients. method receives which one was used.
double reference_lep(
    const FaultModel &model, const PriorDistribution &prior, const DecoderTable &dec, const SpacetimePauli &l,
    size_t max_order, std::string *method);

std::string result_to_csv(const ScalingResult &r);
std::string result_to_json(const ScalingResult &r);

}  // namespace synlearn

#endif
