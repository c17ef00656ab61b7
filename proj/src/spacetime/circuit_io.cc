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

#include "synlearn/spacetime/circuit_io.h"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace synlearn {

namespace {

using nlohmann::json;

size_t line_of(std::string_view text, std::string_view needle) {
    size_t pos = text.find(needle);
    if (pos == std::string_view::npos) {
        return 0;
    }
    size_t line = 1;
    for (size_t i = 0; i < pos; i++) {
        line += text[i] == '\n' ? 1 : 0;
    }
    return line;
}

struct Context {
    std::string_view text;
    std::string source;

    [[noreturn]] void fail(const std::string &msg, std::string_view locate = {}) const {
        std::string where = source;
        if (!locate.empty()) {
            if (size_t line = line_of(text, locate)) {
                where += ":" + std::to_string(line);
            }
        }
        throw std::invalid_argument(where + ": " + msg);
    }

    PauliString pauli(const json &j, size_t n, const std::string &what) const {
        if (!j.is_string()) {
            fail(what + " must be a string.");
        }
        std::string s = j.get<std::string>();
        try {
            return PauliString::parse(s, n);
        } catch (const std::invalid_argument &e) {
            fail(what + ": " + e.what(), "\"" + s + "\"");
        }
    }

    size_t count(const json &obj, const char *key) const {
        if (!obj.contains(key) || !obj[key].is_number_unsigned()) {
            fail(std::string("missing or non-integer field '") + key + "'.", std::string("\"") + key + "\"");
        }
        return obj[key].get<size_t>();
    }
};

CliffordLayer parse_layer(const Context &ctx, const json &j, size_t n, size_t t) {
    std::string what = "layer " + std::to_string(t);
    if (j.is_string()) {
        if (j.get<std::string>() != "identity") {
            ctx.fail(what + ": unknown layer keyword '" + j.get<std::string>() + "'.");
        }
        return CliffordLayer::identity(n);
    }
    if (!j.is_object()) {
        ctx.fail(what + ": expected \"identity\" or an object.");
    }
    if (j.contains("symplectic")) {
        const json &rows = j["symplectic"];
        if (!rows.is_array() || rows.size() != 2 * n) {
            ctx.fail(what + ": 'symplectic' needs " + std::to_string(2 * n) + " rows.");
        }
        gf2::BitMatrix m(2 * n, 2 * n);
        for (size_t r = 0; r < 2 * n; r++) {
            std::string row = rows[r].is_string() ? rows[r].get<std::string>() : "";
            if (row.size() != 2 * n) {
                ctx.fail(what + ": symplectic row " + std::to_string(r) + " must have " + std::to_string(2 * n) +
                         " characters.");
            }
            try {
                m.set_row(r, gf2::BitVec::from_string(row));
            } catch (const std::invalid_argument &e) {
                ctx.fail(what + ": " + e.what(), row);
            }
        }
        try {
            return CliffordLayer(n, std::move(m));
        } catch (const std::invalid_argument &e) {
            ctx.fail(what + ": " + e.what());
        }
    }
    CliffordLayer layer = CliffordLayer::identity(n);
    if (!j.contains("gates") || !j["gates"].is_array()) {
        ctx.fail(what + ": expected a 'gates' or 'symplectic' entry.");
    }
    for (const json &g : j["gates"]) {
        if (!g.is_array() || g.empty() || !g[0].is_string()) {
            ctx.fail(what + ": each gate is [NAME, qubit, ...].");
        }
        std::string name = g[0].get<std::string>();
        std::vector<size_t> qs;
        for (size_t i = 1; i < g.size(); i++) {
            if (!g[i].is_number_unsigned() || g[i].get<size_t>() == 0 || g[i].get<size_t>() > n) {
                ctx.fail(what + ": gate " + name + " has a qubit outside 1.." + std::to_string(n) + ".");
            }
            qs.push_back(g[i].get<size_t>() - 1);
        }
        auto arity = [&](size_t k) {
            if (qs.size() != k) {
                ctx.fail(what + ": gate " + name + " takes " + std::to_string(k) + " qubit(s).");
            }
        };
        try {
            if (name == "CNOT" || name == "CX") {
                arity(2);
                layer.cnot(qs[0], qs[1]);
            } else if (name == "H") {
                arity(1);
                layer.h(qs[0]);
            } else if (name == "S") {
                arity(1);
                layer.s(qs[0]);
            } else if (name == "SWAP") {
                arity(2);
                layer.swap(qs[0], qs[1]);
            } else {
                ctx.fail(what + ": unknown gate '" + name + "'.", "\"" + name + "\"");
            }
        } catch (const std::invalid_argument &e) {
            ctx.fail(what + ": " + e.what());
        }
    }
    return layer;
}

json layer_to_json(const CliffordLayer &layer) {
    if (layer.is_identity()) {
        return "identity";
    }
    json rows = json::array();
    for (size_t r = 0; r < layer.symp().rows(); r++) {
        rows.push_back(layer.symp().row_vec(r).to_string());
    }
    return json{{"symplectic", rows}};
}

}  // namespace

CircuitSpec parse_circuit_json(std::string_view text, const std::string &source_name) {
    Context ctx{text, source_name};
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        ctx.fail(std::string("JSON parse error: ") + e.what());
    }
    if (!root.is_object()) {
        ctx.fail("top level must be an object.");
    }
    CircuitSpec spec;
    spec.name = root.value("name", source_name);
    spec.n = ctx.count(root, "n");
    spec.T = ctx.count(root, "T");
    if (spec.n == 0 || spec.T == 0) {
        ctx.fail("n and T must be positive.");
    }

    const json layers = root.value("layers", json("identity"));
    if (layers.is_string()) {
        for (size_t t = 0; t < spec.T; t++) {
            spec.layers.push_back(parse_layer(ctx, layers, spec.n, t));
        }
    } else if (layers.is_array()) {
        if (layers.size() != spec.T) {
            ctx.fail("'layers' must have T = " + std::to_string(spec.T) + " entries.", "\"layers\"");
        }
        for (size_t t = 0; t < spec.T; t++) {
            spec.layers.push_back(parse_layer(ctx, layers[t], spec.n, t));
        }
    } else {
        ctx.fail("'layers' must be \"identity\" or an array.", "\"layers\"");
    }

    spec.checks.assign(spec.T, {});
    if (root.contains("checks")) {
        if (!root["checks"].is_array()) {
            ctx.fail("'checks' must be an array.", "\"checks\"");
        }
        for (const json &step : root["checks"]) {
            size_t t = ctx.count(step, "t");
            if (t >= spec.T) {
                ctx.fail("check step t=" + std::to_string(t) + " is outside 0..T-1.");
            }
            if (!step.contains("generators") || !step["generators"].is_array()) {
                ctx.fail("check step t=" + std::to_string(t) + " needs a 'generators' array.");
            }
            for (const json &g : step["generators"]) {
                spec.checks[t].push_back(ctx.pauli(g, spec.n, "check at t=" + std::to_string(t)));
            }
        }
    }
    if (!root.contains("base_stabilizers") || !root["base_stabilizers"].is_array()) {
        ctx.fail("missing 'base_stabilizers' array.");
    }
    for (const json &s : root["base_stabilizers"]) {
        spec.base_stabilizers.push_back(ctx.pauli(s, spec.n, "base stabilizer"));
    }
    if (root.contains("logicals")) {
        for (const json &l : root["logicals"]) {
            spec.logicals.push_back(ctx.pauli(l, spec.n, "logical"));
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        // Point at the first Pauli literal quoted in the message, if any.
        std::string msg = e.what();
        std::string locate;
        for (const auto &step : spec.checks) {
            for (const auto &c : step) {
                if (msg.find(" " + c.to_string() + " ") != std::string::npos) {
                    locate = "\"" + c.to_string() + "\"";
                    break;
                }
            }
            if (!locate.empty()) {
                break;
            }
        }
        ctx.fail(msg, locate);
    }
    return spec;
}

CircuitSpec load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open circuit file '" + path + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_circuit_json(buf.str(), path);
}

std::string circuit_to_json(const CircuitSpec &spec) {
    json root;
    root["name"] = spec.name;
    root["n"] = spec.n;
    root["T"] = spec.T;
    bool all_identity = true;
    for (const auto &l : spec.layers) {
        all_identity = all_identity && l.is_identity();
    }
    if (all_identity) {
        root["layers"] = "identity";
    } else {
        json layers = json::array();
        for (const auto &l : spec.layers) {
            layers.push_back(layer_to_json(l));
        }
        root["layers"] = layers;
    }
    json checks = json::array();
    for (size_t t = 0; t < spec.checks.size(); t++) {
        if (spec.checks[t].empty()) {
            continue;
        }
        json gens = json::array();
        for (const auto &c : spec.checks[t]) {
            gens.push_back(c.to_string());
        }
        checks.push_back(json{{"t", t}, {"generators", gens}});
    }
    root["checks"] = checks;
    json stabs = json::array();
    for (const auto &s : spec.base_stabilizers) {
        stabs.push_back(s.to_string());
    }
    root["base_stabilizers"] = stabs;
    if (!spec.logicals.empty()) {
        json logs = json::array();
        for (const auto &l : spec.logicals) {
            logs.push_back(l.to_string());
        }
        root["logicals"] = logs;
    }
    return root.dump(2) + "\n";
}

}  // namespace synlearn
