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

#ifndef SYNLEARN_TESTS_INSTANCES_H
#define SYNLEARN_TESTS_INSTANCES_H

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "synlearn/faults/fault_io.h"
#include "synlearn/faults/fault_model.h"
#include "synlearn/spacetime/generators.h"
#include "synlearn/spacetime/spacetime_code.h"

namespace synlearn::testing {

/// Absolute path of a file under the bundled data directory.
std::string data_path(const std::string &relative);

std::shared_ptr<const SpacetimeCode> shared_code(const CircuitSpec &c);

/// Template models at rate p: bit-flip noise for repetition circuits,
/// depolarizing noise for surface and Bacon-Shor circuits.
FaultModel repetition_model(size_t d, size_t rounds, double p);
FaultModel surface_model(size_t d, size_t rounds, double p);
FaultModel bacon_shor_model(size_t m, double p);

/// Repetition d = 3, one round, bit-flip template at rate p, plus one extra
/// generator equal to the first data fault dressed with the bare X logical.
/// The extra generator shares its syndrome but is not gauge equivalent, so
/// it is C-labeled. q_first and q_dressed set the two coefficients.
FaultModel dressed_repetition_model(double p, double q_first, double q_dressed);

/// Uniformly random spacetime Pauli.
SpacetimePauli random_pauli(const SpacetimeLayout &layout, std::mt19937_64 &rng);

}  // namespace synlearn::testing

#endif
