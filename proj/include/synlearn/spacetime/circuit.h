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

#ifndef SYNLEARN_SPACETIME_CIRCUIT_H
#define SYNLEARN_SPACETIME_CIRCUIT_H

#include <cstddef>
#include <string>
#include <vector>

#include "synlearn/gf2/bitmatrix.h"
#include "synlearn/spacetime/pauli.h"

namespace synlearn {

/// A Clifford unitary modulo Paulis, as its 2n x 2n symplectic matrix acting
/// on column vectors in [x | z] order: p' = symp * p.
class CliffordLayer {
   public:
    CliffordLayer() = default;
    /// Throws std::invalid_argument unless symp is 2n x 2n and symplectic.
    CliffordLayer(size_t n, gf2::BitMatrix symp);

    static CliffordLayer identity(size_t n);

    size_t num_qubits() const noexcept {
        return n_;
    }
    const gf2::BitMatrix &symp() const noexcept {
        return symp_;
    }
    bool is_identity() const;

    PauliString apply(const PauliString &p) const;
    /// Symplectic inverse, Omega symp^T Omega.
    CliffordLayer inverse() const;
    /// (this then next): next.symp * this.symp.
    CliffordLayer then(const CliffordLayer &next) const;

    /// Gate builders (0-based qubits). Each returns the layer with the gate
    /// appended after the existing action.
    CliffordLayer &cnot(size_t control, size_t target);
    CliffordLayer &h(size_t q);
    CliffordLayer &s(size_t q);
    CliffordLayer &swap(size_t a, size_t b);

    bool operator==(const CliffordLayer &other) const = default;

   private:
    size_t n_ = 0;
    gf2::BitMatrix symp_;
};

/// symp^T Omega symp == Omega.
bool is_symplectic(const gf2::BitMatrix &symp);

/// Layered syndrome-extraction circuit.
///
/// layers[t] maps slice t to slice t + 1 for t = 0..T-1. checks[t] lists the
/// stabilizer generators measured between slices t and t + 1; they act on the
/// state at time t. base_stabilizers generate the code stabilizer group and
/// logicals optionally lists base-code logical representatives.
struct CircuitSpec {
    size_t n = 0;
    size_t T = 0;
    std::vector<CliffordLayer> layers;
    std::vector<std::vector<PauliString>> checks;
    std::vector<PauliString> base_stabilizers;
    std::vector<PauliString> logicals;
    std::string name;

    SpacetimeLayout layout() const {
        return {n, T};
    }

    /// Checks the structural invariants and throws std::invalid_argument with
    /// a message naming the offending item otherwise:
    ///  - T even and positive, one layer and one check list per step;
    ///  - checks within a step pairwise commute and have disjoint supports;
    ///  - every check and logical commutes with every base stabilizer;
    ///  - every layer maps the stabilizer group onto itself.
    void validate() const;

    /// u_(t1,t0): composition of layers t0..t1-1 (identity when t1 == t0).
    CliffordLayer propagator(size_t t1, size_t t0) const;

    bool operator==(const CircuitSpec &other) const = default;
};

}  // namespace synlearn

#endif
