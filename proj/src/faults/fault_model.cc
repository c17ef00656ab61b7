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

#include "synlearn/faults/fault_model.h"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace synlearn {

namespace {

constexpr size_t kDenseGuardLog2 = 22;

std::string describe(const FaultGenerator &g, size_t i) {
    return "generator " + std::to_string(i) + " (" + (g.label.empty() ? g.support.to_string() : g.label) + ")";
}

// DFS over subsets of size <= max_order, in index order. visit(weight_ratio,
// acc) is called for every subset including the empty one; weight_ratio is
// the product of q/(1-q) over members.
template <typename Visit>
void for_each_subset(
    const std::vector<gf2::BitVec> &vecs, const std::vector<double> &ratio, size_t max_order, gf2::BitVec acc,
    Visit &&visit) {
    struct Frame {
        size_t next;
        double w;
        gf2::BitVec acc;
        size_t depth;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 1.0, std::move(acc), 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        visit(f.w, f.acc);
        if (f.depth == max_order) {
            continue;
        }
        for (size_t i = vecs.size(); i-- > f.next;) {
            stack.push_back({i + 1, f.w * ratio[i], f.acc ^ vecs[i], f.depth + 1});
        }
    }
}

}  // namespace

FaultModel::FaultModel(std::shared_ptr<const SpacetimeCode> code, std::vector<FaultGenerator> generators)
    : code_(std::move(code)), generators_(std::move(generators)) {
    if (!code_) {
        throw std::invalid_argument("FaultModel: code is null.");
    }
    std::unordered_map<gf2::BitVec, size_t, gf2::BitVecHash> seen;
    for (size_t i = 0; i < generators_.size(); i++) {
        const FaultGenerator &g = generators_[i];
        if (!(g.support.layout() == code_->layout())) {
            throw std::invalid_argument("FaultModel: " + describe(g, i) + " has the wrong spacetime layout.");
        }
        if (g.support.is_identity()) {
            throw std::invalid_argument("FaultModel: " + describe(g, i) + " has identity support.");
        }
        if (!std::isfinite(g.q)) {
            throw std::invalid_argument("FaultModel: " + describe(g, i) + " has a non-finite coefficient.");
        }
        if (1 - 2 * g.q <= 0) {
            throw std::invalid_argument(
                "FaultModel: " + describe(g, i) + " has q = " + std::to_string(g.q) +
                "; every eigenvalue factor 1 - 2q must be positive (the model assumes lambda > 0).");
        }
        auto [it, inserted] = seen.emplace(g.support.bits(), i);
        if (!inserted) {
            throw std::invalid_argument(
                "FaultModel: " + describe(g, i) + " repeats the support of generator " + std::to_string(it->second) +
                ".");
        }
        syndromes_.push_back(code_->syndrome(g.support));
        signatures_.push_back(code_->logical_signature(g.support));
    }
}

bool FaultModel::sampleable() const {
    for (const auto &g : generators_) {
        if (g.q < 0) {
            return false;
        }
    }
    return true;
}

FaultModel FaultModel::with_coefficients(const std::vector<double> &q) const {
    if (q.size() != generators_.size()) {
        throw std::invalid_argument("FaultModel::with_coefficients: wrong coefficient count.");
    }
    std::vector<FaultGenerator> gens = generators_;
    for (size_t i = 0; i < gens.size(); i++) {
        gens[i].q = q[i];
    }
    return FaultModel(code_, std::move(gens));
}

double eigenvalue(const FaultModel &model, const SpacetimePauli &b) {
    gf2::BitVec dual = gf2::symplectic_dual(b.bits(), b.layout().n);
    double lambda = 1;
    for (const auto &g : model.generators()) {
        if (gf2::dot(dual, g.support.bits())) {
            lambda *= 1 - 2 * g.q;
        }
    }
    return lambda;
}

double DenseDistribution::probability_of(const SpacetimePauli &a) const {
    for (size_t i = 0; i < elements.size(); i++) {
        if (elements[i] == a) {
            return probs[i];
        }
    }
    return 0;
}

DenseDistribution error_rates_dense(const FaultModel &model) {
    const SpacetimeLayout layout = model.code().layout();
    const size_t N = layout.num_bits();
    // Reduced basis vectors with their coordinates over the chosen basis
    // elements (the independent generators, in order).
    struct Row {
        gf2::BitVec vec;
        size_t pivot;
        uint64_t mask;
    };
    std::vector<Row> rows;
    std::vector<gf2::BitVec> basis;
    std::vector<uint64_t> coords;
    for (const auto &g : model.generators()) {
        gf2::BitVec r = g.support.bits();
        uint64_t m = 0;
        for (const Row &row : rows) {
            if (r.get(row.pivot)) {
                r ^= row.vec;
                m ^= row.mask;
            }
        }
        if (auto p = r.first_set()) {
            if (basis.size() >= kDenseGuardLog2) {
                throw std::length_error(
                    "error_rates_dense: the fault supports span more than 2^" + std::to_string(kDenseGuardLog2) +
                    " group elements.");
            }
            uint64_t bit = uint64_t{1} << basis.size();
            basis.push_back(g.support.bits());
            rows.push_back({std::move(r), *p, m ^ bit});
            coords.push_back(bit);
        } else {
            coords.push_back(m);
        }
    }
    const size_t size = size_t{1} << basis.size();
    std::vector<double> p(size, 0.0);
    p[0] = 1;
    for (size_t i = 0; i < coords.size(); i++) {
        const double q = model.generators()[i].q;
        const uint64_t c = coords[i];
        if (c == 0) {
            continue;
        }
        for (size_t x = 0; x < size; x++) {
            size_t y = x ^ c;
            if (x < y) {
                double a = p[x];
                double b = p[y];
                p[x] = (1 - q) * a + q * b;
                p[y] = q * a + (1 - q) * b;
            }
        }
    }
    DenseDistribution out;
    out.elements.reserve(size);
    for (size_t x = 0; x < size; x++) {
        gf2::BitVec v(N);
        for (size_t j = 0; j < basis.size(); j++) {
            if ((x >> j) & 1) {
                v ^= basis[j];
            }
        }
        out.elements.emplace_back(layout, std::move(v));
    }
    out.probs = std::move(p);
    return out;
}

std::vector<double> PriorDistribution::coefficients() const {
    std::vector<double> out;
    out.reserve(classes.size());
    for (const auto &c : classes) {
        out.push_back(c.q);
    }
    return out;
}

PriorDistribution build_prior(const FaultModel &model) {
    PriorDistribution prior;
    std::unordered_map<gf2::BitVec, size_t, gf2::BitVecHash> index;
    std::vector<double> keep;  // product of (1 - 2q) per class
    for (size_t i = 0; i < model.size(); i++) {
        const gf2::BitVec &s = model.syndrome(i);
        if (s.none()) {
            const auto &g = model.generators()[i];
            throw std::invalid_argument(
                "build_prior: generator " + std::to_string(i) + " (" +
                (g.label.empty() ? g.support.to_string() : g.label) +
                ") has zero syndrome and cannot enter the prior; see the learnability report.");
        }
        auto [it, inserted] = index.emplace(s, prior.classes.size());
        if (inserted) {
            prior.classes.push_back({i, {}, s, 0});
            keep.push_back(1);
        }
        prior.classes[it->second].members.push_back(i);
        keep[it->second] *= 1 - 2 * model.generators()[i].q;
    }
    for (size_t c = 0; c < prior.classes.size(); c++) {
        prior.classes[c].q = (1 - keep[c]) / 2;
    }
    return prior;
}

double effective_rate(const FaultModel &model, const SpacetimePauli &a, size_t max_order) {
    if (max_order == 0) {
        throw std::invalid_argument("effective_rate: max_order must be at least 1.");
    }
    const SpacetimeCode &code = model.code();
    std::vector<gf2::BitVec> reduced;
    std::vector<double> ratio;
    double p0 = 1;
    for (const auto &g : model.generators()) {
        reduced.push_back(code.gauge_residue_bits(g.support.bits()));
        ratio.push_back(g.q / (1 - g.q));
        p0 *= 1 - g.q;
    }
    double total = 0;
    for_each_subset(reduced, ratio, max_order, code.gauge_residue_bits(a.bits()), [&](double w, const gf2::BitVec &acc) {
        if (acc.none()) {
            total += w;
        }
    });
    return p0 * total;
}

}  // namespace synlearn
