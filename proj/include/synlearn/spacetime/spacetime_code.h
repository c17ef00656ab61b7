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

#ifndef SYNLEARN_SPACETIME_SPACETIME_CODE_H
#define SYNLEARN_SPACETIME_SPACETIME_CODE_H

#include <cstddef>
#include <vector>

#include "synlearn/gf2/bitmatrix.h"
#include "synlearn/spacetime/circuit.h"
#include "synlearn/spacetime/pauli.h"

namespace synlearn {

/// Forward propagation: slice t of the result is the product over i <= t of
/// u_(t,i) applied to slice i of a. Throws std::invalid_argument on a layout
/// mismatch.
SpacetimePauli propagate_forward(const CircuitSpec &c, const SpacetimePauli &a);

/// Backward propagation: slice t of the result is the product over i >= t of
/// u_(i,t)^-1 applied to slice i of a. Adjoint of propagate_forward under the
/// symplectic form.
SpacetimePauli propagate_backward(const CircuitSpec &c, const SpacetimePauli &a);

/// g(a, t) = eta_{t+1}(u_(t+1,t)(a)) eta_t(a). Requires t < T.
SpacetimePauli pauli_transport(const CircuitSpec &c, const PauliString &a, size_t t);

/// Slice T of propagate_forward(c, a), the net Pauli frame at the end.
PauliString terminal_frame(const CircuitSpec &c, const SpacetimePauli &a);

struct CodeDims {
    size_t total_bits = 0;
    size_t gauge_raw = 0;
    size_t gauge_rank = 0;
    size_t gauge_perp_dim = 0;
    /// Measurement-group candidates before filtering, those kept, and those
    /// added from the center basis to complete the generating set.
    size_t meas_candidates_raw = 0;
    size_t meas_candidates_kept = 0;
    size_t meas_completed = 0;
    size_t M = 0;
    size_t logical_count = 0;
    size_t k = 0;
};

/// Spacetime subsystem code of a syndrome-extraction circuit.
///
/// meas_gens are ordered: kept candidates back-propagated checks in step
/// order, then the terminal round of base stabilizers, then any completion
/// vectors from the center of the gauge group. logical_gens span the gauge
/// normalizer modulo the measurement group.
class SpacetimeCode {
   public:
    const CircuitSpec &circuit() const noexcept {
        return circuit_;
    }
    SpacetimeLayout layout() const noexcept {
        return circuit_.layout();
    }
    const std::vector<SpacetimePauli> &gauge_gens() const noexcept {
        return gauge_gens_;
    }
    const std::vector<SpacetimePauli> &meas_gens() const noexcept {
        return meas_gens_;
    }
    const std::vector<SpacetimePauli> &logical_gens() const noexcept {
        return logical_gens_;
    }
    /// Base-code Pauli for each logical generator, or the identity when the
    /// generator was completed from the normalizer directly.
    const std::vector<PauliString> &base_logicals() const noexcept {
        return base_logicals_;
    }
    const CodeDims &dims() const noexcept {
        return dims_;
    }
    size_t num_meas() const noexcept {
        return meas_gens_.size();
    }

    /// Syndrome: bit i is 1 iff meas_gens[i] anticommutes with a.
    gf2::BitVec syndrome(const SpacetimePauli &a) const;
    gf2::BitVec syndrome_bits(const gf2::BitVec &bits) const;
    /// Bit j is 1 iff logical_gens[j] anticommutes with a. For a with zero
    /// syndrome, a and b are gauge equivalent iff their signatures agree.
    gf2::BitVec logical_signature(const SpacetimePauli &a) const;
    gf2::BitVec logical_signature_bits(const gf2::BitVec &bits) const;

    bool in_gauge(const SpacetimePauli &a) const;
    bool in_gauge_bits(const gf2::BitVec &bits) const;
    /// Residue after elimination against the gauge basis. Linear in bits and
    /// zero exactly on the gauge group.
    gf2::BitVec gauge_residue_bits(const gf2::BitVec &bits) const {
        return gauge_basis_.reduce(bits);
    }
    /// a commutes with every gauge generator.
    bool in_gauge_perp(const SpacetimePauli &a) const;
    bool in_base_stabilizer(const PauliString &p) const;

    friend SpacetimeCode build_spacetime_code(const CircuitSpec &c);

   private:
    CircuitSpec circuit_;
    std::vector<SpacetimePauli> gauge_gens_;
    std::vector<SpacetimePauli> meas_gens_;
    std::vector<SpacetimePauli> logical_gens_;
    std::vector<PauliString> base_logicals_;
    CodeDims dims_;

    gf2::SpanBasis gauge_basis_{0};
    gf2::SpanBasis stabilizer_basis_{0};
    gf2::BitMatrix gauge_duals_;
    gf2::BitMatrix meas_duals_;
    gf2::BitMatrix logical_duals_;
};

/// Builds the code. Validates the circuit first (errors name the offending
/// check pair) and throws std::logic_error if the dimension identities fail.
/// User logicals that are not in the gauge normalizer, or are dependent
/// modulo the measurement group, throw std::invalid_argument.
SpacetimeCode build_spacetime_code(const CircuitSpec &c);

/// Free-function form of SpacetimeCode::syndrome.
gf2::BitVec syndrome_of(const SpacetimeCode &code, const SpacetimePauli &a);

}  // namespace synlearn

#endif
