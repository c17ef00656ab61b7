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

#include "synlearn/spacetime/circuit.h"

#include <stdexcept>

namespace synlearn {

namespace {

gf2::BitMatrix omega(size_t n) {
    gf2::BitMatrix w(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        w.set(i, n + i);
        w.set(n + i, i);
    }
    return w;
}

}  // namespace

bool is_symplectic(const gf2::BitMatrix &symp) {
    if (symp.rows() != symp.cols() || symp.rows() % 2 != 0) {
        return false;
    }
    gf2::BitMatrix w = omega(symp.rows() / 2);
    return symp.transposed().multiply(w).multiply(symp) == w;
}

CliffordLayer::CliffordLayer(size_t n, gf2::BitMatrix symp) : n_(n), symp_(std::move(symp)) {
    if (symp_.rows() != 2 * n || symp_.cols() != 2 * n) {
        throw std::invalid_argument("CliffordLayer: matrix must be 2n x 2n.");
    }
    if (!is_symplectic(symp_)) {
        throw std::invalid_argument("CliffordLayer: matrix is not symplectic.");
    }
}

CliffordLayer CliffordLayer::identity(size_t n) {
    return CliffordLayer(n, gf2::BitMatrix::identity(2 * n));
}

bool CliffordLayer::is_identity() const {
    return symp_ == gf2::BitMatrix::identity(2 * n_);
}

PauliString CliffordLayer::apply(const PauliString &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("CliffordLayer::apply: qubit count mismatch.");
    }
    return PauliString(n_, symp_.multiply(p.xz()));
}

CliffordLayer CliffordLayer::inverse() const {
    gf2::BitMatrix w = omega(n_);
    CliffordLayer out;
    out.n_ = n_;
    out.symp_ = w.multiply(symp_.transposed()).multiply(w);
    return out;
}

CliffordLayer CliffordLayer::then(const CliffordLayer &next) const {
    if (next.n_ != n_) {
        throw std::invalid_argument("CliffordLayer::then: qubit count mismatch.");
    }
    CliffordLayer out;
    out.n_ = n_;
    out.symp_ = next.symp_.multiply(symp_);
    return out;
}

CliffordLayer &CliffordLayer::cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::invalid_argument("CliffordLayer::cnot: bad qubit indices.");
    }
    symp_.xor_row(target, control);
    symp_.xor_row(n_ + control, n_ + target);
    return *this;
}

CliffordLayer &CliffordLayer::h(size_t q) {
    if (q >= n_) {
        throw std::invalid_argument("CliffordLayer::h: bad qubit index.");
    }
    symp_.swap_rows(q, n_ + q);
    return *this;
}

CliffordLayer &CliffordLayer::s(size_t q) {
    if (q >= n_) {
        throw std::invalid_argument("CliffordLayer::s: bad qubit index.");
    }
    symp_.xor_row(n_ + q, q);
    return *this;
}

CliffordLayer &CliffordLayer::swap(size_t a, size_t b) {
    if (a >= n_ || b >= n_) {
        throw std::invalid_argument("CliffordLayer::swap: bad qubit index.");
    }
    symp_.swap_rows(a, b);
    symp_.swap_rows(n_ + a, n_ + b);
    return *this;
}

CliffordLayer CircuitSpec::propagator(size_t t1, size_t t0) const {
    if (t0 > t1 || t1 > T) {
        throw std::out_of_range("CircuitSpec::propagator: need t0 <= t1 <= T.");
    }
    CliffordLayer u = CliffordLayer::identity(n);
    for (size_t t = t0; t < t1; t++) {
        u = u.then(layers[t]);
    }
    return u;
}

void CircuitSpec::validate() const {
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("Circuit '" + name + "': " + msg);
    };
    if (n == 0) {
        fail("n must be positive.");
    }
    if (T == 0 || T % 2 != 0) {
        fail("T must be even and positive (got " + std::to_string(T) + ").");
    }
    if (layers.size() != T) {
        fail("expected " + std::to_string(T) + " layers, got " + std::to_string(layers.size()) + ".");
    }
    if (checks.size() != T) {
        fail("expected " + std::to_string(T) + " check lists, got " + std::to_string(checks.size()) + ".");
    }
    for (size_t t = 0; t < T; t++) {
        if (layers[t].num_qubits() != n) {
            fail("layer " + std::to_string(t) + " acts on the wrong number of qubits.");
        }
    }
    auto check_size = [&](const PauliString &p, const std::string &what) {
        if (p.num_qubits() != n) {
            fail(what + " acts on the wrong number of qubits.");
        }
    };
    for (const auto &s : base_stabilizers) {
        check_size(s, "stabilizer " + s.to_string());
    }
    for (size_t i = 0; i < base_stabilizers.size(); i++) {
        for (size_t j = i + 1; j < base_stabilizers.size(); j++) {
            if (!base_stabilizers[i].commutes_with(base_stabilizers[j])) {
                fail("stabilizers " + base_stabilizers[i].to_string() + " and " + base_stabilizers[j].to_string() +
                     " anticommute.");
            }
        }
    }
    for (size_t t = 0; t < T; t++) {
        const auto &step = checks[t];
        for (size_t i = 0; i < step.size(); i++) {
            const PauliString &a = step[i];
            std::string label = "check " + a.to_string() + " at t=" + std::to_string(t);
            check_size(a, label);
            if (a.is_identity()) {
                fail(label + " is the identity.");
            }
            for (size_t j = i + 1; j < step.size(); j++) {
                const PauliString &b = step[j];
                std::string pair = "checks " + a.to_string() + " and " + b.to_string() + " at t=" + std::to_string(t);
                if (!a.commutes_with(b)) {
                    fail(pair + " anticommute.");
                }
                for (size_t q = 0; q < n; q++) {
                    if (a.acts_on(q) && b.acts_on(q)) {
                        fail(pair + " share qubit " + std::to_string(q + 1) + ".");
                    }
                }
            }
            for (const auto &s : base_stabilizers) {
                if (!a.commutes_with(s)) {
                    fail(label + " anticommutes with stabilizer " + s.to_string() + ".");
                }
            }
        }
    }
    for (const auto &l : logicals) {
        check_size(l, "logical " + l.to_string());
        for (const auto &s : base_stabilizers) {
            if (!l.commutes_with(s)) {
                fail("logical " + l.to_string() + " anticommutes with stabilizer " + s.to_string() + ".");
            }
        }
    }
    gf2::SpanBasis stab(2 * n);
    for (const auto &s : base_stabilizers) {
        stab.insert(s.xz());
    }
    for (size_t t = 0; t < T; t++) {
        for (const auto &s : base_stabilizers) {
            PauliString image = layers[t].apply(s);
            if (!stab.contains(image.xz())) {
                fail("layer " + std::to_string(t) + " maps stabilizer " + s.to_string() + " to " + image.to_string() +
                     ", which is outside the stabilizer group.");
            }
        }
    }
}

}  // namespace synlearn
