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

#ifndef SYNLEARN_SPACETIME_CIRCUIT_IO_H
#define SYNLEARN_SPACETIME_CIRCUIT_IO_H

#include <string>
#include <string_view>

#include "synlearn/spacetime/circuit.h"

namespace synlearn {

/// Circuit files are JSON objects:
///
///   {
///     "name": "rep_d3_r3",              (optional)
///     "n": 3, "T": 6,
///     "layers": "identity" | [layer, ...],
///     "checks": [{"t": 0, "generators": ["Z1Z2"]}, ...],
///     "base_stabilizers": ["Z1Z2", "Z2Z3"],
///     "logicals": ["X1X2X3", "Z1"]      (optional)
///   }
///
/// A layer is "identity", {"gates": [["CNOT", 1, 2], ["H", 3], ...]} with
/// 1-based qubits applied left to right, or {"symplectic": [row, ...]} with 2n
/// rows of 2n '0'/'1' characters. Steps without a "checks" entry measure
/// nothing. Errors carry the source name and, where the offending text can be
/// located, its line number. The parsed spec is validated before returning.
CircuitSpec parse_circuit_json(std::string_view text, const std::string &source_name = "<string>");
CircuitSpec load_circuit(const std::string &path);

/// Canonical JSON for spec; parse_circuit_json(circuit_to_json(c)) == c.
std::string circuit_to_json(const CircuitSpec &spec);

}  // namespace synlearn

#endif
