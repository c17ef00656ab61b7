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

#include "synlearn/spacetime/generators.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace synlearn {

namespace {

PauliString on(size_t n, const std::vector<size_t> &qubits, char p) {
    PauliString out(n);
    for (size_t q : qubits) {
        out.set(q, p == 'X', p == 'Z');
    }
    return out;
}

}  // namespace

CircuitSpec repetition_circuit(size_t d, size_t rounds) {
    if (d < 2 || rounds < 1) {
        throw std::invalid_argument("repetition_circuit: need d >= 2 and rounds >= 1.");
    }
    CircuitSpec c;
    c.name = "rep_d" + std::to_string(d) + "_r" + std::to_string(rounds);
    c.n = d;
    c.T = 2 * rounds;
    c.layers.assign(c.T, CliffordLayer::identity(d));
    c.checks.assign(c.T, {});
    for (size_t i = 0; i + 1 < d; i++) {
        PauliString zz = on(d, {i, i + 1}, 'Z');
        c.base_stabilizers.push_back(zz);
        for (size_t t = i % 2; t < c.T; t += 2) {
            c.checks[t].push_back(zz);
        }
    }
    std::vector<size_t> all;
    for (size_t q = 0; q < d; q++) {
        all.push_back(q);
    }
    c.logicals = {on(d, all, 'X'), on(d, {0}, 'Z')};
    c.validate();
    return c;
}

CircuitSpec rotated_surface_circuit(size_t d, size_t rounds) {
    if (d < 3 || d % 2 == 0 || rounds < 1) {
        throw std::invalid_argument("rotated_surface_circuit: need odd d >= 3 and rounds >= 1.");
    }
    const size_t n = d * d;
    auto idx = [&](long r, long c) { return static_cast<size_t>(r) * d + static_cast<size_t>(c); };
    // Plaquette with top-left corner (r, c), r and c in -1..d-1, clipped to the
    // lattice. Type Z when r + c is even. Weight-2 plaquettes survive only on
    // the boundary matching their type.
    std::vector<PauliString> z_even, z_odd, x_even, x_odd;
    const long D = static_cast<long>(d);
    for (long r = -1; r < D; r++) {
        for (long c = -1; c < D; c++) {
            bool z_type = ((r + c) % 2 + 2) % 2 == 0;
            std::vector<size_t> qs;
            for (long dr = 0; dr < 2; dr++) {
                for (long dc = 0; dc < 2; dc++) {
                    long rr = r + dr;
                    long cc = c + dc;
                    if (rr >= 0 && rr < D && cc >= 0 && cc < D) {
                        qs.push_back(idx(rr, cc));
                    }
                }
            }
            bool vertical_edge = c == -1 || c == D - 1;
            bool horizontal_edge = r == -1 || r == D - 1;
            if (qs.size() == 4) {
                // bulk
            } else if (qs.size() == 2 && z_type && vertical_edge && !horizontal_edge) {
                // Z boundary on the left and right
            } else if (qs.size() == 2 && !z_type && horizontal_edge && !vertical_edge) {
                // X boundary on the top and bottom
            } else {
                continue;
            }
            PauliString p = on(n, qs, z_type ? 'Z' : 'X');
            bool even_row = ((r % 2) + 2) % 2 == 0;
            (z_type ? (even_row ? z_even : z_odd) : (even_row ? x_even : x_odd)).push_back(p);
        }
    }
    CircuitSpec c;
    c.name = "surface_d" + std::to_string(d) + "_r" + std::to_string(rounds);
    c.n = n;
    c.T = 4 * rounds;
    c.layers.assign(c.T, CliffordLayer::identity(n));
    c.checks.assign(c.T, {});
    for (size_t round = 0; round < rounds; round++) {
        c.checks[4 * round + 0] = z_even;
        c.checks[4 * round + 1] = z_odd;
        c.checks[4 * round + 2] = x_even;
        c.checks[4 * round + 3] = x_odd;
    }
    for (const auto *group : {&z_even, &z_odd, &x_even, &x_odd}) {
        c.base_stabilizers.insert(c.base_stabilizers.end(), group->begin(), group->end());
    }
    std::vector<size_t> row0, col0;
    for (size_t k = 0; k < d; k++) {
        row0.push_back(idx(0, static_cast<long>(k)));
        col0.push_back(idx(static_cast<long>(k), 0));
    }
    c.logicals = {on(n, row0, 'Z'), on(n, col0, 'X')};
    c.validate();
    return c;
}

CircuitSpec bacon_shor_circuit(size_t m) {
    if (m < 2) {
        throw std::invalid_argument("bacon_shor_circuit: need m >= 2.");
    }
    const size_t n = m * m;
    CircuitSpec c;
    c.name = "bacon_shor_" + std::to_string(m) + "x" + std::to_string(m);
    c.n = n;
    c.T = 2 * (m - 1);
    c.layers.assign(c.T, CliffordLayer::identity(n));
    c.checks.assign(c.T, {});
    for (size_t i = 0; i + 1 < m; i++) {
        std::vector<size_t> rows_z, cols_x;
        for (size_t k = 0; k < m; k++) {
            c.checks[i].push_back(on(n, {i * m + k, (i + 1) * m + k}, 'Z'));
            c.checks[m - 1 + i].push_back(on(n, {k * m + i, k * m + i + 1}, 'X'));
            rows_z.insert(rows_z.end(), {i * m + k, (i + 1) * m + k});
            cols_x.insert(cols_x.end(), {k * m + i, k * m + i + 1});
        }
        c.base_stabilizers.push_back(on(n, rows_z, 'Z'));
        c.base_stabilizers.push_back(on(n, cols_x, 'X'));
    }
    std::vector<size_t> col0, row0;
    for (size_t k = 0; k < m; k++) {
        col0.push_back(k * m);
        row0.push_back(k);
    }
    c.logicals = {on(n, col0, 'X'), on(n, row0, 'Z')};
    c.validate();
    return c;
}

}  // namespace synlearn
