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

#ifndef SYNLEARN_FAULTS_FAULT_IO_H
#define SYNLEARN_FAULTS_FAULT_IO_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synlearn/faults/fault_model.h"

namespace synlearn {

/// Fault files are JSON, either a bare array of entries or an object
/// {"p": 0.001, "generators": [entry, ...]}. An entry is
///
///   {"pauli": "X1@t0", "q": 0.001}                 explicit coefficient
///   {"pauli": "X1@t0Z1@t1", "scale": 0.9}          q = scale * p
///   {"slices": {"0": "X1", "1": "X1"}, "q": 0.01}  per-slice Pauli strings
///
/// with an optional "label". p_override replaces the file's "p".
FaultModel parse_fault_json(
    std::string_view text, std::shared_ptr<const SpacetimeCode> code, const std::string &source_name = "<string>",
    std::optional<double> p_override = std::nullopt);
FaultModel load_fault_model(
    const std::string &path, std::shared_ptr<const SpacetimeCode> code, std::optional<double> p_override = std::nullopt);

/// Writes every generator with its explicit q.
std::string fault_model_to_json(const FaultModel &model);

/// Per-location noise template; q = scale * p when instantiated.
struct TemplateEntry {
    SpacetimePauli support;
    double scale = 1;
    std::string label;
};

enum class TemplateKind {
    /// X data faults only (bit-flip noise; suits the repetition code).
    kBitflip,
    /// X, Y and Z data faults at a third of the rate each.
    kDepolarize,
};

TemplateKind parse_template_kind(std::string_view name);

/// Data faults on every qubit at slices 0..T-1 (scale 0.8 at t = 0, 1.0
/// after), plus one measurement fault per check: a Pauli P on the check's
/// first qubit that anticommutes with it, applied as eta_t(P) eta_{t+1}(u P)
/// with scale 0.9, which flips exactly that outcome.
std::vector<TemplateEntry> fault_template(const CircuitSpec &c, TemplateKind kind);

FaultModel instantiate_template(
    std::shared_ptr<const SpacetimeCode> code, const std::vector<TemplateEntry> &entries, double p);

/// {"p": p, "generators": [{"pauli", "scale", "label"}, ...]}.
std::string template_to_json(const std::vector<TemplateEntry> &entries, double p);

}  // namespace synlearn

#endif
