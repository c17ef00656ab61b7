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

#include "synlearn/spacetime/pauli.h"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace synlearn {

namespace {

struct Term {
    char pauli;
    size_t qubit;  // 0-based
    std::string token;
};

[[noreturn]] void bad_token(std::string_view text, size_t pos, const std::string &why) {
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && end - pos < 16) {
        end++;
    }
    throw std::invalid_argument(
        "Bad Pauli literal '" + std::string(text) + "' at token '" + std::string(text.substr(pos, end - pos)) +
        "': " + why);
}

size_t read_number(std::string_view text, size_t &pos, size_t token_start) {
    size_t start = pos;
    size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<size_t>(text[pos] - '0');
        if (value > (size_t{1} << 40)) {
            bad_token(text, token_start, "index too large.");
        }
        pos++;
    }
    if (pos == start) {
        bad_token(text, token_start, "expected a number.");
    }
    return value;
}

void skip_separators(std::string_view text, size_t &pos) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) {
        pos++;
    }
}

void apply(gf2::BitVec &xz, size_t offset, size_t n, char pauli, size_t q) {
    if (pauli == 'X' || pauli == 'Y') {
        xz.flip(offset + q);
    }
    if (pauli == 'Z' || pauli == 'Y') {
        xz.flip(offset + n + q);
    }
}

bool is_identity_literal(std::string_view text) {
    size_t pos = 0;
    skip_separators(text, pos);
    if (pos == text.size()) {
        return true;
    }
    if (text[pos] != 'I') {
        return false;
    }
    pos++;
    skip_separators(text, pos);
    return pos == text.size();
}

}  // namespace

PauliString::PauliString(size_t n, gf2::BitVec xz) : n_(n), xz_(std::move(xz)) {
    if (xz_.size() != 2 * n) {
        throw std::invalid_argument("PauliString: bit vector must have length 2n.");
    }
}

PauliString PauliString::parse(std::string_view text, size_t n) {
    PauliString out(n);
    if (is_identity_literal(text)) {
        return out;
    }
    size_t pos = 0;
    skip_separators(text, pos);
    while (pos < text.size()) {
        size_t token_start = pos;
        char c = text[pos];
        if (c != 'X' && c != 'Y' && c != 'Z') {
            bad_token(text, token_start, "expected X, Y or Z.");
        }
        pos++;
        size_t k = read_number(text, pos, token_start);
        if (k == 0 || k > n) {
            bad_token(text, token_start, "qubit index must be in 1.." + std::to_string(n) + ".");
        }
        apply(out.xz_, 0, n, c, k - 1);
        skip_separators(text, pos);
    }
    return out;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < n_; q++) {
        w += acts_on(q) ? 1 : 0;
    }
    return w;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("PauliString: qubit count mismatch.");
    }
    xz_ ^= other.xz_;
    return *this;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("PauliString: qubit count mismatch.");
    }
    return !gf2::symplectic_inner(xz_, other.xz_, n_);
}

std::string PauliString::to_string() const {
    std::string out;
    for (size_t q = 0; q < n_; q++) {
        bool xb = x(q);
        bool zb = z(q);
        if (xb || zb) {
            out += xb ? (zb ? 'Y' : 'X') : 'Z';
            out += std::to_string(q + 1);
        }
    }
    return out.empty() ? "I" : out;
}

SpacetimePauli::SpacetimePauli(SpacetimeLayout layout, gf2::BitVec bits) : layout_(layout), bits_(std::move(bits)) {
    if (bits_.size() != layout.num_bits()) {
        throw std::invalid_argument("SpacetimePauli: bit vector must have length 2n(T+1).");
    }
}

SpacetimePauli SpacetimePauli::on_slice(SpacetimeLayout layout, size_t t, const PauliString &p) {
    SpacetimePauli out(layout);
    out.set_slice(t, p);
    return out;
}

SpacetimePauli SpacetimePauli::parse(std::string_view text, SpacetimeLayout layout) {
    SpacetimePauli out(layout);
    if (is_identity_literal(text)) {
        return out;
    }
    const size_t n = layout.n;
    std::vector<Term> pending;
    size_t pos = 0;
    skip_separators(text, pos);
    while (pos < text.size()) {
        size_t token_start = pos;
        char c = text[pos];
        if (c == '@') {
            pos++;
            if (pos >= text.size() || text[pos] != 't') {
                bad_token(text, token_start, "expected '@t<time>'.");
            }
            pos++;
            size_t t = read_number(text, pos, token_start);
            if (t > layout.T) {
                bad_token(text, token_start, "time must be in 0.." + std::to_string(layout.T) + ".");
            }
            if (pending.empty()) {
                bad_token(text, token_start, "time suffix without a preceding Pauli term.");
            }
            for (const Term &term : pending) {
                apply(out.bits_, 2 * n * t, n, term.pauli, term.qubit);
            }
            pending.clear();
        } else if (c == 'X' || c == 'Y' || c == 'Z') {
            pos++;
            size_t k = read_number(text, pos, token_start);
            if (k == 0 || k > n) {
                bad_token(text, token_start, "qubit index must be in 1.." + std::to_string(n) + ".");
            }
            pending.push_back({c, k - 1, std::string(text.substr(token_start, pos - token_start))});
        } else {
            bad_token(text, token_start, "expected X, Y, Z or '@t'.");
        }
        skip_separators(text, pos);
    }
    if (!pending.empty()) {
        throw std::invalid_argument(
            "Bad Pauli literal '" + std::string(text) + "' at token '" + pending.front().token +
            "': missing '@t<time>' suffix.");
    }
    return out;
}

PauliString SpacetimePauli::slice(size_t t) const {
    if (t > layout_.T) {
        throw std::out_of_range("SpacetimePauli::slice: time out of range.");
    }
    return PauliString(layout_.n, bits_.slice(2 * layout_.n * t, 2 * layout_.n));
}

void SpacetimePauli::set_slice(size_t t, const PauliString &p) {
    if (t > layout_.T || p.num_qubits() != layout_.n) {
        throw std::invalid_argument("SpacetimePauli::set_slice: time or qubit count out of range.");
    }
    bits_.assign_slice(2 * layout_.n * t, p.xz());
}

void SpacetimePauli::xor_slice(size_t t, const PauliString &p) {
    PauliString cur = slice(t);
    cur *= p;
    set_slice(t, cur);
}

SpacetimePauli &SpacetimePauli::operator*=(const SpacetimePauli &other) {
    if (!(other.layout_ == layout_)) {
        throw std::invalid_argument("SpacetimePauli: layout mismatch.");
    }
    bits_ ^= other.bits_;
    return *this;
}

std::string SpacetimePauli::to_string() const {
    std::string out;
    for (size_t t = 0; t <= layout_.T; t++) {
        PauliString p = slice(t);
        if (!p.is_identity()) {
            out += p.to_string() + "@t" + std::to_string(t);
        }
    }
    return out.empty() ? "I" : out;
}

bool anticommutes(const SpacetimePauli &a, const SpacetimePauli &b) {
    if (!(a.layout() == b.layout())) {
        throw std::invalid_argument("anticommutes: layout mismatch.");
    }
    return gf2::symplectic_inner(a.bits(), b.bits(), a.layout().n);
}

}  // namespace synlearn
