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

#ifndef SYNLEARN_SPACETIME_PAULI_H
#define SYNLEARN_SPACETIME_PAULI_H

#include <cstddef>
#include <string>
#include <string_view>

#include "synlearn/gf2/bitvec.h"

namespace synlearn {

/// n-qubit Pauli operator modulo phase, stored as [x(n) | z(n)].
///
/// Text form: a concatenation of terms P<k> with P in {X, Y, Z} and k a
/// 1-based qubit index, e.g. "X1Z3" or "Y2". Terms on the same qubit
/// multiply. "I" (or the empty string) is the identity. Whitespace and '*'
/// between terms are ignored. to_string() emits the canonical form: qubits
/// ascending, one letter per qubit, "I" for the identity.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t n) : n_(n), xz_(2 * n) {
    }
    /// xz must have length 2n.
    PauliString(size_t n, gf2::BitVec xz);

    static PauliString parse(std::string_view text, size_t n);

    size_t num_qubits() const noexcept {
        return n_;
    }
    const gf2::BitVec &xz() const noexcept {
        return xz_;
    }
    gf2::BitVec &xz() noexcept {
        return xz_;
    }

    bool x(size_t q) const {
        return xz_.get(q);
    }
    bool z(size_t q) const {
        return xz_.get(n_ + q);
    }
    void set(size_t q, bool x, bool z) {
        xz_.set(q, x);
        xz_.set(n_ + q, z);
    }
    /// 0-based qubit indices acted on nontrivially.
    bool acts_on(size_t q) const {
        return x(q) || z(q);
    }
    size_t weight() const;
    bool is_identity() const {
        return xz_.none();
    }

    PauliString &operator*=(const PauliString &other);
    friend PauliString operator*(PauliString a, const PauliString &b) {
        a *= b;
        return a;
    }
    bool commutes_with(const PauliString &other) const;

    std::string to_string() const;
    bool operator==(const PauliString &other) const = default;

   private:
    size_t n_ = 0;
    gf2::BitVec xz_;
};

/// Shape of the spacetime Pauli group: n qubits over slices t = 0..T.
struct SpacetimeLayout {
    size_t n = 0;
    size_t T = 0;

    size_t num_slices() const {
        return T + 1;
    }
    size_t num_bits() const {
        return 2 * n * (T + 1);
    }
    bool operator==(const SpacetimeLayout &other) const = default;
};

/// Element of the spacetime Pauli group, a product of one n-qubit Pauli per
/// time slice. Bits for slice t occupy [2nt, 2n(t+1)) in [x | z] order, so
/// the symplectic form is the per-slice form summed over slices.
///
/// Text form: terms P<k>@t<time>, concatenated, e.g. "X1@t0Z2@t3". A run of
/// terms may share one suffix: "X1Z2@t3" equals "X1@t3Z2@t3". Every term
/// needs a time; "I" is the identity.
class SpacetimePauli {
   public:
    SpacetimePauli() = default;
    explicit SpacetimePauli(SpacetimeLayout layout) : layout_(layout), bits_(layout.num_bits()) {
    }
    SpacetimePauli(SpacetimeLayout layout, gf2::BitVec bits);

    /// η_t(p): p placed on slice t, identity elsewhere.
    static SpacetimePauli on_slice(SpacetimeLayout layout, size_t t, const PauliString &p);
    static SpacetimePauli parse(std::string_view text, SpacetimeLayout layout);

    const SpacetimeLayout &layout() const noexcept {
        return layout_;
    }
    const gf2::BitVec &bits() const noexcept {
        return bits_;
    }
    gf2::BitVec &bits() noexcept {
        return bits_;
    }

    PauliString slice(size_t t) const;
    void set_slice(size_t t, const PauliString &p);
    void xor_slice(size_t t, const PauliString &p);

    bool is_identity() const {
        return bits_.none();
    }
    SpacetimePauli &operator*=(const SpacetimePauli &other);
    friend SpacetimePauli operator*(SpacetimePauli a, const SpacetimePauli &b) {
        a *= b;
        return a;
    }
    bool operator==(const SpacetimePauli &other) const = default;

    std::string to_string() const;

   private:
    SpacetimeLayout layout_;
    gf2::BitVec bits_;
};

/// 1 iff a and b anticommute. Throws std::invalid_argument on layout mismatch.
bool anticommutes(const SpacetimePauli &a, const SpacetimePauli &b);

}  // namespace synlearn

#endif
