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

#ifndef SYNLEARN_SPACETIME_GENERATORS_H
#define SYNLEARN_SPACETIME_GENERATORS_H

#include <cstddef>

#include "synlearn/spacetime/circuit.h"

namespace synlearn {

/// Distance-d bit-flip repetition code measured directly on the data
/// (no ancillas, identity layers). Checks Z_iZ_{i+1} with even i run at even
/// steps and odd i at odd steps; T = 2 * rounds. Logicals X...X and Z_1.
CircuitSpec repetition_circuit(size_t d, size_t rounds);

/// Distance-d rotated surface code (d odd), qubit (r, c) at index d*r + c.
/// Each round takes four steps: Z plaquettes with even top row, Z with odd,
/// X with even, X with odd. Logicals Z on row 0 and X on column 0.
CircuitSpec rotated_surface_circuit(size_t d, size_t rounds);

/// m x m Bacon-Shor code, qubit (r, c) at index m*r + c. Steps
/// 0..m-2 measure vertical ZZ links between rows i and i+1; steps m-1..2m-3
/// measure horizontal XX links between columns i and i+1; T = 2(m-1).
/// Logicals X on column 0 and Z on row 0.
CircuitSpec bacon_shor_circuit(size_t m);

}  // namespace synlearn

#endif
