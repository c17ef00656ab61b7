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

#include "synlearn/learnability/learnability.h"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace synlearn {

const char *label_name(Label label) {
    switch (label) {
        case Label::kA:
            return "A";
        case Label::kB:
            return "B";
        case Label::kC:
            return "C";
        case Label::kInvisible:
            return "invisible";
        case Label::kTrivial:
            return "trivial";
    }
    return "?";
}

size_t LearnabilityReport::count(Label label) const {
    return static_cast<size_t>(std::count(labels.begin(), labels.end(), label));
}

size_t LearnabilityReport::class_of(size_t generator) const {
    for (size_t c = 0; c < classes.size(); c++) {
        const auto &m = classes[c].members;
        if (std::find(m.begin(), m.end(), generator) != m.end()) {
            return c;
        }
    }
    return SIZE_MAX;
}

LearnabilityReport analyze(const FaultModel &model) {
    const SpacetimeCode &code = model.code();
    LearnabilityReport report;
    report.labels.assign(model.size(), Label::kA);

    std::unordered_map<gf2::BitVec, size_t, gf2::BitVecHash> index;
    std::vector<gf2::BitVec> residues;
    residues.reserve(model.size());
    for (size_t i = 0; i < model.size(); i++) {
        residues.push_back(code.gauge_residue_bits(model.generators()[i].support.bits()));
        const gf2::BitVec &s = model.syndrome(i);
        if (s.none()) {
            if (residues[i].none()) {
                report.labels[i] = Label::kTrivial;
                report.trivial.push_back(i);
            } else {
                report.labels[i] = Label::kInvisible;
                report.invisible.push_back(i);
            }
            continue;
        }
        auto [it, inserted] = index.emplace(s, report.classes.size());
        if (inserted) {
            report.classes.push_back({s, i, {}, {}});
        }
        report.classes[it->second].members.push_back(i);
    }

    for (auto &cls : report.classes) {
        const size_t rep = cls.representative;
        // Residues are linear, so equal residues mean gauge equivalence.
        std::vector<const gf2::BitVec *> keys;
        for (size_t i : cls.members) {
            size_t sub = keys.size();
            for (size_t k = 0; k < keys.size(); k++) {
                if (*keys[k] == residues[i]) {
                    sub = k;
                    break;
                }
            }
            if (sub == keys.size()) {
                keys.push_back(&residues[i]);
                cls.subclass_sizes.push_back(0);
            }
            cls.subclass_sizes[sub]++;
            if (i == rep) {
                continue;
            }
            if (sub == 0) {
                report.labels[i] = Label::kB;
                continue;
            }
            report.labels[i] = Label::kC;
            gf2::BitVec diff = model.signature(i) ^ model.signature(rep);
            auto w = diff.first_set();
            if (!w) {
                throw std::logic_error("analyze: inequivalent pair with equal logical signatures.");
            }
            report.unlearnable_pairs.push_back({i, rep, *w});
        }
        size_t total = cls.members.size();
        size_t largest = *std::max_element(cls.subclass_sizes.begin(), cls.subclass_sizes.end());
        size_t smallest = *std::min_element(cls.subclass_sizes.begin(), cls.subclass_sizes.end());
        report.min_c_over_partitions += total - largest;
        report.max_c_over_partitions += total - smallest;
    }

    report.invisible_present = !report.invisible.empty();
    report.logical_learnable = report.count(Label::kC) == 0;
    report.physical_learnable = report.count(Label::kA) == model.size();
    return report;
}

double unlearnable_correction_bound(
    const LearnabilityReport &report, const FaultModel &model, const SpacetimePauli &b, double eps_c) {
    if (!model.code().in_gauge_perp(b)) {
        throw std::invalid_argument(
            "unlearnable_correction_bound: b must commute with the spacetime gauge group.");
    }
    size_t count = 0;
    for (const auto &pair : report.unlearnable_pairs) {
        bool with_c = anticommutes(b, model.generators()[pair.generator].support);
        bool with_rep = anticommutes(b, model.generators()[pair.representative].support);
        count += with_c != with_rep ? 1 : 0;
    }
    return static_cast<double>(count) * eps_c;
}

std::string report_table(const LearnabilityReport &report, const FaultModel &model) {
    std::ostringstream out;
    out << "class  syndrome                          members  A  B  C  subclasses\n";
    for (size_t c = 0; c < report.classes.size(); c++) {
        const auto &cls = report.classes[c];
        size_t nb = 0;
        size_t nc = 0;
        for (size_t i : cls.members) {
            nb += report.labels[i] == Label::kB ? 1 : 0;
            nc += report.labels[i] == Label::kC ? 1 : 0;
        }
        std::string syn = cls.syndrome.to_string();
        if (syn.size() > 32) {
            syn = syn.substr(0, 29) + "...";
        }
        out << std::left;
        out.width(7);
        out << c;
        out.width(34);
        out << syn;
        out.width(9);
        out << cls.members.size();
        out << "1  ";
        out.width(3);
        out << nb;
        out.width(3);
        out << nc;
        for (size_t k = 0; k < cls.subclass_sizes.size(); k++) {
            out << (k ? "," : "") << cls.subclass_sizes[k];
        }
        out << "\n";
    }
    for (size_t i : report.invisible) {
        const auto &g = model.generators()[i];
        out << "invisible  " << (g.label.empty() ? g.support.to_string() : g.label) << "\n";
    }
    for (size_t i : report.trivial) {
        const auto &g = model.generators()[i];
        out << "trivial    " << (g.label.empty() ? g.support.to_string() : g.label) << "\n";
    }
    out << "physical_learnable=" << (report.physical_learnable ? "true" : "false")
        << " logical_learnable=" << (report.logical_learnable ? "true" : "false")
        << " invisible_present=" << (report.invisible_present ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace synlearn
