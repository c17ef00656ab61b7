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

#ifndef SYNLEARN_LEARNABILITY_LEARNABILITY_H
#define SYNLEARN_LEARNABILITY_LEARNABILITY_H

#include <cstddef>
#include <string>
#include <vector>

#include "synlearn/faults/fault_model.h"

namespace synlearn {

enum class Label {
    /// First generator (declaration order) with its syndrome.
    kA,
    /// Same syndrome as its class representative and gauge equivalent to it.
    kB,
    /// Same syndrome as its representative but differs by a bare logical.
    kC,
    /// Zero syndrome and not in the gauge group: a logical fault no check sees.
    kInvisible,
    /// Zero syndrome and in the gauge group: acts trivially.
    kTrivial,
};

const char *label_name(Label label);

struct SyndromeClassReport {
    gf2::BitVec syndrome;
    size_t representative = 0;
    std::vector<size_t> members;
    /// Sizes of the gauge-equivalence subclasses within the class, the
    /// representative's subclass first. Choosing a representative from a
    /// subclass of size s labels total - s members C.
    std::vector<size_t> subclass_sizes;
};

struct UnlearnablePair {
    size_t generator = 0;
    size_t representative = 0;
    /// Index of a logical generator anticommuting with their product.
    size_t witness_logical = 0;
};

struct LearnabilityReport {
    std::vector<Label> labels;
    std::vector<SyndromeClassReport> classes;
    std::vector<size_t> invisible;
    std::vector<size_t> trivial;
    std::vector<UnlearnablePair> unlearnable_pairs;
    bool physical_learnable = false;
    bool logical_learnable = false;
    bool invisible_present = false;
    /// Fewest and most C labels over every choice of class representatives.
    size_t min_c_over_partitions = 0;
    size_t max_c_over_partitions = 0;

    size_t count(Label label) const;
    /// Index into classes for generator i, or SIZE_MAX for zero syndromes.
    size_t class_of(size_t generator) const;
};

/// Groups generators by syndrome and labels each one. Gauge equivalence is
/// decided by elimination against the gauge basis.
LearnabilityReport analyze(const FaultModel &model);

/// eps_c times the number of C-labeled generators c with
/// <b, c> != <b, rep(c)>. Throws std::invalid_argument unless b commutes
/// with the whole gauge group.
double unlearnable_correction_bound(
    const LearnabilityReport &report, const FaultModel &model, const SpacetimePauli &b, double eps_c);

/// Fixed-width text table, one row per syndrome class plus zero-syndrome rows.
std::string report_table(const LearnabilityReport &report, const FaultModel &model);

}  // namespace synlearn

#endif
