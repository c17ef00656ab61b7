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

#include "synlearn/spacetime/spacetime_code.h"

#include <stdexcept>
#include <string>

namespace synlearn {

namespace {

void require_layout(const CircuitSpec &c, const SpacetimePauli &a, const char *op) {
    if (!(a.layout() == c.layout())) {
        throw std::invalid_argument(
            std::string(op) + ": operator has layout n=" + std::to_string(a.layout().n) +
            ", T=" + std::to_string(a.layout().T) + " but the circuit has n=" + std::to_string(c.n) +
            ", T=" + std::to_string(c.T) + ".");
    }
}

gf2::BitMatrix dual_rows(const std::vector<gf2::BitVec> &rows, size_t cols, size_t n) {
    gf2::BitMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        m.set_row(i, gf2::symplectic_dual(rows[i], n));
    }
    return m;
}

std::vector<gf2::BitVec> bits_of(const std::vector<SpacetimePauli> &ps) {
    std::vector<gf2::BitVec> out;
    out.reserve(ps.size());
    for (const auto &p : ps) {
        out.push_back(p.bits());
    }
    return out;
}

}  // namespace

SpacetimePauli propagate_forward(const CircuitSpec &c, const SpacetimePauli &a) {
    require_layout(c, a, "propagate_forward");
    SpacetimePauli out(c.layout());
    PauliString acc(c.n);
    for (size_t t = 0; t <= c.T; t++) {
        if (t > 0) {
            acc = c.layers[t - 1].apply(acc);
        }
        acc *= a.slice(t);
        out.set_slice(t, acc);
    }
    return out;
}

SpacetimePauli propagate_backward(const CircuitSpec &c, const SpacetimePauli &a) {
    require_layout(c, a, "propagate_backward");
    std::vector<CliffordLayer> inverses;
    inverses.reserve(c.T);
    for (const auto &layer : c.layers) {
        inverses.push_back(layer.inverse());
    }
    SpacetimePauli out(c.layout());
    PauliString acc(c.n);
    for (size_t t = c.T + 1; t-- > 0;) {
        if (t < c.T) {
            acc = inverses[t].apply(acc);
        }
        acc *= a.slice(t);
        out.set_slice(t, acc);
    }
    return out;
}

SpacetimePauli pauli_transport(const CircuitSpec &c, const PauliString &a, size_t t) {
    if (t >= c.T) {
        throw std::out_of_range(
            "pauli_transport: t=" + std::to_string(t) + " must be below T=" + std::to_string(c.T) + ".");
    }
    if (a.num_qubits() != c.n) {
        throw std::invalid_argument("pauli_transport: qubit count mismatch.");
    }
    SpacetimePauli out(c.layout());
    out.set_slice(t, a);
    out.set_slice(t + 1, c.layers[t].apply(a));
    return out;
}

PauliString terminal_frame(const CircuitSpec &c, const SpacetimePauli &a) {
    return propagate_forward(c, a).slice(c.T);
}

gf2::BitVec SpacetimeCode::syndrome_bits(const gf2::BitVec &bits) const {
    return meas_duals_.multiply(bits);
}

gf2::BitVec SpacetimeCode::syndrome(const SpacetimePauli &a) const {
    require_layout(circuit_, a, "syndrome");
    return syndrome_bits(a.bits());
}

gf2::BitVec SpacetimeCode::logical_signature_bits(const gf2::BitVec &bits) const {
    return logical_duals_.multiply(bits);
}

gf2::BitVec SpacetimeCode::logical_signature(const SpacetimePauli &a) const {
    require_layout(circuit_, a, "logical_signature");
    return logical_signature_bits(a.bits());
}

bool SpacetimeCode::in_gauge_bits(const gf2::BitVec &bits) const {
    return gauge_basis_.contains(bits);
}

bool SpacetimeCode::in_gauge(const SpacetimePauli &a) const {
    require_layout(circuit_, a, "in_gauge");
    return in_gauge_bits(a.bits());
}

bool SpacetimeCode::in_gauge_perp(const SpacetimePauli &a) const {
    require_layout(circuit_, a, "in_gauge_perp");
    return gauge_duals_.multiply(a.bits()).none();
}

bool SpacetimeCode::in_base_stabilizer(const PauliString &p) const {
    return stabilizer_basis_.contains(p.xz());
}

gf2::BitVec syndrome_of(const SpacetimeCode &code, const SpacetimePauli &a) {
    return code.syndrome(a);
}

SpacetimeCode build_spacetime_code(const CircuitSpec &c) {
    c.validate();
    const SpacetimeLayout layout = c.layout();
    const size_t N = layout.num_bits();
    const size_t n = c.n;

    SpacetimeCode code;
    code.circuit_ = c;
    code.dims_.total_bits = N;

    // Gauge group: transports of everything commuting with the step's checks,
    // plus the checks themselves on their slice.
    for (size_t t = 0; t < c.T; t++) {
        std::vector<gf2::BitVec> check_bits;
        for (const auto &m : c.checks[t]) {
            check_bits.push_back(m.xz());
        }
        gf2::BitMatrix centralizer;
        if (check_bits.empty()) {
            centralizer = gf2::BitMatrix::identity(2 * n);
        } else {
            centralizer = gf2::nullspace(dual_rows(check_bits, 2 * n, n));
        }
        for (size_t r = 0; r < centralizer.rows(); r++) {
            code.gauge_gens_.push_back(pauli_transport(c, PauliString(n, centralizer.row_vec(r)), t));
        }
        for (const auto &m : c.checks[t]) {
            code.gauge_gens_.push_back(SpacetimePauli::on_slice(layout, t, m));
        }
    }
    code.dims_.gauge_raw = code.gauge_gens_.size();

    code.gauge_basis_ = gf2::SpanBasis(N);
    for (const auto &g : code.gauge_gens_) {
        code.gauge_basis_.insert(g.bits());
    }
    const std::vector<gf2::BitVec> &basis = code.gauge_basis_.basis();
    const size_t r = basis.size();
    code.dims_.gauge_rank = r;
    code.gauge_duals_ = dual_rows(basis, N, n);

    gf2::BitMatrix perp = gf2::nullspace(code.gauge_duals_);
    code.dims_.gauge_perp_dim = perp.rows();
    gf2::SpanBasis perp_basis(N);
    for (size_t i = 0; i < perp.rows(); i++) {
        perp_basis.insert(perp.row_vec(i));
    }

    // Center of the gauge group: combinations of basis vectors that commute
    // with the whole basis.
    gf2::BitMatrix gram(r, r);
    for (size_t i = 0; i < r; i++) {
        gf2::BitVec d = gf2::symplectic_dual(basis[i], n);
        for (size_t j = 0; j < r; j++) {
            gram.set(i, j, gf2::dot(d, basis[j]));
        }
    }
    gf2::BitMatrix coeffs = gf2::nullspace(gram);
    gf2::SpanBasis center(N);
    std::vector<gf2::BitVec> center_vectors;
    for (size_t i = 0; i < coeffs.rows(); i++) {
        gf2::BitVec v(N);
        for (size_t j = 0; j < r; j++) {
            if (coeffs.get(i, j)) {
                v ^= basis[j];
            }
        }
        center.insert(v);
        center_vectors.push_back(std::move(v));
    }

    // Measurement group generators.
    gf2::SpanBasis meas_span(N);
    auto offer = [&](const SpacetimePauli &cand) {
        code.dims_.meas_candidates_raw++;
        if (center.contains(cand.bits()) && meas_span.insert(cand.bits())) {
            code.meas_gens_.push_back(cand);
            code.dims_.meas_candidates_kept++;
        }
    };
    for (size_t t = 0; t < c.T; t++) {
        for (const auto &m : c.checks[t]) {
            offer(propagate_backward(c, SpacetimePauli::on_slice(layout, t, m)));
        }
    }
    for (const auto &s : c.base_stabilizers) {
        offer(propagate_backward(c, SpacetimePauli::on_slice(layout, c.T, s)));
    }
    for (const auto &v : center_vectors) {
        if (meas_span.insert(v)) {
            code.meas_gens_.emplace_back(layout, v);
            code.dims_.meas_completed++;
        }
    }
    code.dims_.M = code.meas_gens_.size();
    if (code.dims_.M != center.rank()) {
        throw std::logic_error("build_spacetime_code: measurement generators do not span the gauge center.");
    }
    code.meas_duals_ = dual_rows(bits_of(code.meas_gens_), N, n);

    code.stabilizer_basis_ = gf2::SpanBasis(2 * n);
    for (const auto &s : c.base_stabilizers) {
        code.stabilizer_basis_.insert(s.xz());
    }

    // Bare logicals.
    const size_t want = code.dims_.gauge_perp_dim - code.dims_.M;
    gf2::SpanBasis logical_span = meas_span;
    auto try_logical = [&](const PauliString &base, bool user) {
        SpacetimePauli cand = propagate_backward(c, SpacetimePauli::on_slice(layout, c.T, base));
        if (!perp_basis.contains(cand.bits())) {
            if (user) {
                throw std::invalid_argument(
                    "Logical " + base.to_string() + " does not commute with the spacetime gauge group.");
            }
            return;
        }
        if (!logical_span.insert(cand.bits())) {
            if (user) {
                throw std::invalid_argument(
                    "Logical " + base.to_string() + " is dependent on the measurement group or earlier logicals.");
            }
            return;
        }
        code.logical_gens_.push_back(std::move(cand));
        code.base_logicals_.push_back(base);
    };
    for (const auto &l : c.logicals) {
        try_logical(l, true);
    }
    if (code.logical_gens_.size() < want) {
        std::vector<gf2::BitVec> stab_bits;
        for (const auto &s : c.base_stabilizers) {
            stab_bits.push_back(s.xz());
        }
        gf2::BitMatrix normalizer = stab_bits.empty() ? gf2::BitMatrix::identity(2 * n)
                                                      : gf2::nullspace(dual_rows(stab_bits, 2 * n, n));
        gf2::SpanBasis mod_s = code.stabilizer_basis_;
        for (size_t i = 0; i < normalizer.rows() && code.logical_gens_.size() < want; i++) {
            gf2::BitVec v = normalizer.row_vec(i);
            if (mod_s.insert(v)) {
                try_logical(PauliString(n, v), false);
            }
        }
    }
    for (size_t i = 0; i < perp.rows() && code.logical_gens_.size() < want; i++) {
        gf2::BitVec v = perp.row_vec(i);
        if (logical_span.insert(v)) {
            code.logical_gens_.emplace_back(layout, v);
            code.base_logicals_.emplace_back(n);
        }
    }
    code.dims_.logical_count = code.logical_gens_.size();
    if (code.dims_.gauge_rank + code.dims_.gauge_perp_dim != N) {
        throw std::logic_error("build_spacetime_code: rank(G) + dim(G-perp) differs from the group dimension.");
    }
    if (code.dims_.logical_count != want || want % 2 != 0) {
        throw std::logic_error(
            "build_spacetime_code: found " + std::to_string(code.dims_.logical_count) +
            " logical generators, expected an even count of " + std::to_string(want) + ".");
    }
    code.dims_.k = want / 2;
    code.logical_duals_ = dual_rows(bits_of(code.logical_gens_), N, n);
    return code;
}

}  // namespace synlearn
