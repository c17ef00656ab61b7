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

#include "synlearn/faults/fault_io.h"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace synlearn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &source, size_t index, const std::string &msg) {
    throw std::invalid_argument(source + ": fault entry " + std::to_string(index) + ": " + msg);
}

SpacetimePauli parse_support(const json &e, SpacetimeLayout layout, const std::string &source, size_t i) {
    try {
        if (e.contains("pauli")) {
            if (!e["pauli"].is_string()) {
                fail(source, i, "'pauli' must be a string.");
            }
            return SpacetimePauli::parse(e["pauli"].get<std::string>(), layout);
        }
        if (e.contains("slices")) {
            if (!e["slices"].is_object()) {
                fail(source, i, "'slices' must map time to a Pauli string.");
            }
            SpacetimePauli out(layout);
            for (const auto &[key, value] : e["slices"].items()) {
                size_t t = std::stoul(key);
                if (t > layout.T) {
                    fail(source, i, "slice time " + key + " is outside 0..T.");
                }
                out.xor_slice(t, PauliString::parse(value.get<std::string>(), layout.n));
            }
            return out;
        }
    } catch (const std::invalid_argument &e) {
        fail(source, i, e.what());
    }
    fail(source, i, "needs a 'pauli' or 'slices' field.");
}

}  // namespace

FaultModel parse_fault_json(
    std::string_view text, std::shared_ptr<const SpacetimeCode> code, const std::string &source_name,
    std::optional<double> p_override) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(source_name + ": JSON parse error: " + e.what());
    }
    json entries;
    std::optional<double> p = p_override;
    if (root.is_array()) {
        entries = root;
    } else if (root.is_object() && root.contains("generators")) {
        entries = root["generators"];
        if (!p && root.contains("p")) {
            p = root["p"].get<double>();
        }
    } else {
        throw std::invalid_argument(source_name + ": expected an array or an object with 'generators'.");
    }
    std::vector<FaultGenerator> gens;
    for (size_t i = 0; i < entries.size(); i++) {
        const json &e = entries[i];
        if (!e.is_object()) {
            fail(source_name, i, "must be an object.");
        }
        FaultGenerator g;
        g.support = parse_support(e, code->layout(), source_name, i);
        g.label = e.value("label", std::string());
        if (e.contains("q")) {
            g.q = e["q"].get<double>();
        } else if (e.contains("scale")) {
            if (!p) {
                fail(source_name, i, "'scale' needs a global 'p' (in the file or on the command line).");
            }
            g.q = e["scale"].get<double>() * *p;
        } else {
            fail(source_name, i, "needs 'q' or 'scale'.");
        }
        gens.push_back(std::move(g));
    }
    return FaultModel(std::move(code), std::move(gens));
}

FaultModel load_fault_model(
    const std::string &path, std::shared_ptr<const SpacetimeCode> code, std::optional<double> p_override) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open fault file '" + path + "'.");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fault_json(buf.str(), std::move(code), path, p_override);
}

std::string fault_model_to_json(const FaultModel &model) {
    json gens = json::array();
    for (const auto &g : model.generators()) {
        json e{{"pauli", g.support.to_string()}, {"q", g.q}};
        if (!g.label.empty()) {
            e["label"] = g.label;
        }
        gens.push_back(e);
    }
    return json{{"generators", gens}}.dump(2) + "\n";
}

TemplateKind parse_template_kind(std::string_view name) {
    if (name == "bitflip") {
        return TemplateKind::kBitflip;
    }
    if (name == "depolarize") {
        return TemplateKind::kDepolarize;
    }
    throw std::invalid_argument("Unknown fault template '" + std::string(name) + "' (use bitflip or depolarize).");
}

std::vector<TemplateEntry> fault_template(const CircuitSpec &c, TemplateKind kind) {
    const SpacetimeLayout layout = c.layout();
    std::vector<TemplateEntry> out;
    for (size_t t = 0; t < c.T; t++) {
        double scale = t == 0 ? 0.8 : 1.0;
        for (size_t q = 0; q < c.n; q++) {
            auto add = [&](bool x, bool z, char name, double s) {
                PauliString p(c.n);
                p.set(q, x, z);
                out.push_back({SpacetimePauli::on_slice(layout, t, p), s,
                               std::string("data_") + name + std::to_string(q + 1) + "_t" + std::to_string(t)});
            };
            if (kind == TemplateKind::kBitflip) {
                add(true, false, 'X', scale);
            } else {
                add(true, false, 'X', scale / 3);
                add(true, true, 'Y', scale / 3);
                add(false, true, 'Z', scale / 3);
            }
        }
        for (const auto &m : c.checks[t]) {
            size_t q = 0;
            while (!m.acts_on(q)) {
                q++;
            }
            PauliString p(c.n);
            // Anticommutes with the check's action on qubit q.
            if (m.z(q)) {
                p.set(q, true, false);
            } else {
                p.set(q, false, true);
            }
            SpacetimePauli f = pauli_transport(c, p, t);
            out.push_back({f, 0.9, "meas_" + m.to_string() + "_t" + std::to_string(t)});
        }
    }
    return out;
}

FaultModel instantiate_template(
    std::shared_ptr<const SpacetimeCode> code, const std::vector<TemplateEntry> &entries, double p) {
    std::vector<FaultGenerator> gens;
    gens.reserve(entries.size());
    for (const auto &e : entries) {
        gens.push_back({e.support, e.scale * p, e.label});
    }
    return FaultModel(std::move(code), std::move(gens));
}

std::string template_to_json(const std::vector<TemplateEntry> &entries, double p) {
    json gens = json::array();
    for (const auto &e : entries) {
        gens.push_back(json{{"pauli", e.support.to_string()}, {"scale", e.scale}, {"label", e.label}});
    }
    return json{{"p", p}, {"generators", gens}}.dump(2) + "\n";
}

}  // namespace synlearn
