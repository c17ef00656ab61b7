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

#include "commands.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "synlearn/estimator/estimator.h"
#include "synlearn/experiments/experiments.h"
#include "synlearn/experiments/svg_plot.h"
#include "synlearn/faults/fault_io.h"
#include "synlearn/learnability/learnability.h"
#include "synlearn/lep/lep.h"
#include "synlearn/sampler/shot_io.h"
#include "synlearn/spacetime/circuit_io.h"
#include "synlearn/spacetime/generators.h"

namespace synlearn::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr const char *kVersion = "0.1.0";

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void ensure_parent(const std::string &path) {
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) {
        fs::create_directories(parent);
    }
}

void write_file(const std::string &path, const std::string &text) {
    ensure_parent(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'.");
    }
    out << text;
}

// Writes to o.out when given, else to the stream.
void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') {
            out << '\n';
        }
    } else {
        write_file(o.out, text + (text.empty() || text.back() == '\n' ? "" : "\n"));
    }
}

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

uint64_t fnv1a(std::string_view data, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << v;
    return ss.str();
}

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

std::string absolute(const std::string &path) {
    return fs::absolute(fs::path(path)).lexically_normal().string();
}

std::shared_ptr<const SpacetimeCode> load_code(const std::string &path) {
    require(!path.empty(), "--circuit is required.");
    return std::make_shared<const SpacetimeCode>(build_spacetime_code(load_circuit(path)));
}

FaultModel load_model(const Options &o, std::shared_ptr<const SpacetimeCode> code) {
    require(!o.faults.empty(), "--faults is required.");
    return load_fault_model(o.faults, std::move(code), o.p_given ? std::optional<double>(o.p) : std::nullopt);
}

json strings(const std::vector<SpacetimePauli> &v) {
    json a = json::array();
    for (const auto &p : v) {
        a.push_back(p.to_string());
    }
    return a;
}

json report_json(const LearnabilityReport &r, const FaultModel &model) {
    json j;
    json gens = json::array();
    for (size_t i = 0; i < model.size(); i++) {
        gens.push_back({{"index", i},
                        {"label", label_name(r.labels[i])},
                        {"name", model.generators()[i].label},
                        {"syndrome", model.syndrome(i).to_string()}});
    }
    j["generators"] = gens;
    json classes = json::array();
    for (const auto &c : r.classes) {
        classes.push_back({{"syndrome", c.syndrome.to_string()},
                           {"representative", c.representative},
                           {"members", c.members},
                           {"subclass_sizes", c.subclass_sizes}});
    }
    j["classes"] = classes;
    j["invisible"] = r.invisible;
    j["trivial"] = r.trivial;
    json pairs = json::array();
    for (const auto &p : r.unlearnable_pairs) {
        pairs.push_back({{"generator", p.generator}, {"representative", p.representative}, {"witness_logical", p.witness_logical}});
    }
    j["unlearnable_pairs"] = pairs;
    j["physical_learnable"] = r.physical_learnable;
    j["logical_learnable"] = r.logical_learnable;
    j["invisible_present"] = r.invisible_present;
    j["min_c_over_partitions"] = r.min_c_over_partitions;
    j["max_c_over_partitions"] = r.max_c_over_partitions;
    return j;
}

// Zero-syndrome generators have no prior class. Trivial ones act as the
// identity and are always dropped; invisible ones are dropped only under
// --force, after the learnability verdict has been overridden.
struct PreparedModel {
    FaultModel model;
    std::vector<size_t> dropped;
    std::vector<size_t> kept;
};

PreparedModel drop_zero_syndrome(const FaultModel &model) {
    std::vector<FaultGenerator> gens;
    PreparedModel out{model, {}, {}};
    for (size_t i = 0; i < model.size(); i++) {
        if (model.syndrome(i).none()) {
            out.dropped.push_back(i);
        } else {
            out.kept.push_back(i);
            gens.push_back(model.generators()[i]);
        }
    }
    if (!out.dropped.empty()) {
        out.model = FaultModel(model.code_ptr(), std::move(gens));
    }
    return out;
}

std::string dims_table(const SpacetimeCode &code) {
    const CodeDims &d = code.dims();
    std::ostringstream ss;
    ss << "circuit            " << (code.circuit().name.empty() ? "(unnamed)" : code.circuit().name) << "\n"
       << "qubits n           " << code.circuit().n << "\n"
       << "steps T            " << code.circuit().T << "\n"
       << "total bits         " << d.total_bits << "\n"
       << "gauge raw          " << d.gauge_raw << "\n"
       << "gauge rank         " << d.gauge_rank << "\n"
       << "gauge perp dim     " << d.gauge_perp_dim << "\n"
       << "meas candidates    " << d.meas_candidates_raw << " raw, " << d.meas_candidates_kept << " kept, "
       << d.meas_completed << " completed\n"
       << "M                  " << d.M << "\n"
       << "logical gens       " << d.logical_count << "\n"
       << "k                  " << d.k << "\n";
    return ss.str();
}

std::vector<size_t> select_logicals(const std::string &sel, size_t count) {
    std::vector<size_t> out;
    if (sel == "all") {
        for (size_t i = 0; i < count; i++) {
            out.push_back(i);
        }
        return out;
    }
    std::stringstream ss(sel);
    for (std::string part; std::getline(ss, part, ',');) {
        size_t idx = 0;
        try {
            idx = std::stoul(part);
        } catch (const std::exception &) {
            throw std::invalid_argument("--logical: expected 'all' or comma-separated indices, got '" + sel + "'.");
        }
        require(idx < count, "--logical: index " + part + " out of range (" + std::to_string(count) + " logical generators).");
        out.push_back(idx);
    }
    return out;
}

}  // namespace

std::string write_manifest(
    const Options &o, const std::string &command, const std::vector<std::string> &inputs,
    const std::vector<std::string> &outputs, bool out_is_dir) {
    uint64_t h = fnv1a(command);
    for (size_t i = 1; i < o.argv.size(); i++) {
        h = fnv1a(o.argv[i], fnv1a("\x1f", h));
    }
    json in = json::array();
    for (const auto &path : inputs) {
        std::string content = read_file(path);
        h = fnv1a(content, h);
        in.push_back({{"path", absolute(path)}, {"fnv1a", hex64(fnv1a(content))}});
    }
    json j;
    j["command"] = command;
    j["argv"] = o.argv;
    j["cwd"] = fs::current_path().string();
    j["config_hash"] = hex64(h);
    j["seeds"] = {{"seed", o.seed}};
    j["versions"] = {{"synlearn", kVersion}, {"compiler", __VERSION__}, {"cxx_standard", __cplusplus}};
    j["timestamps"] = {{"started_utc", utc_now()}};
    j["inputs"] = in;
    json outs = json::array();
    for (const auto &p : outputs) {
        outs.push_back(absolute(p));
    }
    j["outputs"] = outs;
    std::string path = out_is_dir ? (fs::path(o.out) / "manifest.json").string() : o.out + ".manifest.json";
    write_file(path, j.dump(2) + "\n");
    return path;
}

int cmd_build_code(const Options &o, std::ostream &out) {
    auto code = load_code(o.circuit);
    out << dims_table(*code);
    if (!o.out.empty()) {
        write_manifest(o, "build-code", {o.circuit}, {o.out}, false);
        const CodeDims &d = code->dims();
        json j;
        j["name"] = code->circuit().name;
        j["n"] = code->circuit().n;
        j["T"] = code->circuit().T;
        j["dims"] = {{"total_bits", d.total_bits},
                     {"gauge_raw", d.gauge_raw},
                     {"gauge_rank", d.gauge_rank},
                     {"gauge_perp_dim", d.gauge_perp_dim},
                     {"meas_candidates_raw", d.meas_candidates_raw},
                     {"meas_candidates_kept", d.meas_candidates_kept},
                     {"meas_completed", d.meas_completed},
                     {"M", d.M},
                     {"logical_count", d.logical_count},
                     {"k", d.k}};
        j["gauge_generators"] = strings(code->gauge_gens());
        j["measurement_generators"] = strings(code->meas_gens());
        j["logical_generators"] = strings(code->logical_gens());
        json base = json::array();
        for (const auto &b : code->base_logicals()) {
            base.push_back(b.to_string());
        }
        j["base_logicals"] = base;
        write_file(o.out, j.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_check_learnability(const Options &o, std::ostream &out) {
    auto code = load_code(o.circuit);
    FaultModel model = load_model(o, code);
    LearnabilityReport r = analyze(model);
    out << report_table(r, model);
    if (!o.out.empty()) {
        write_manifest(o, "check-learnability", {o.circuit, o.faults}, {o.out}, false);
        write_file(o.out, report_json(r, model).dump(2) + "\n");
    }
    return r.logical_learnable && !r.invisible_present ? kExitOk : kExitUnlearnable;
}

int cmd_estimate(const Options &o, std::ostream &out) {
    require(o.shots > 0, "--shots must be positive.");
    auto code = load_code(o.circuit);
    FaultModel model = load_model(o, code);
    LearnabilityReport report = analyze(model);
    bool learnable = report.logical_learnable && !report.invisible_present;
    if (!learnable && !o.force) {
        std::cerr << "estimate: the fault model is not learnable up to logical equivalence ("
                  << report.count(Label::kC) << " C-labeled, " << report.invisible.size()
                  << " invisible generators); rerun with --force to estimate anyway.\n";
        return kExitUnlearnable;
    }
    PreparedModel prep = drop_zero_syndrome(model);
    PriorDistribution prior = build_prior(prep.model);
    const size_t rows = o.q_rows == 0 ? default_q_rows(prior.size()) : o.q_rows;
    if (!o.out.empty()) {
        write_manifest(o, "estimate", {o.circuit, o.faults}, {o.out}, false);
    }

    ShotSet shots = sample_shots(prep.model, o.shots, o.seed);
    SubsampleDesign design = draw_design(*code, prior, rows, o.seed);
    auto est = estimate_eigenvalues(shots, design.rows);
    std::vector<size_t> clamped;
    auto y = log_targets(est, o.clamp ? std::optional<double>(1.0 / static_cast<double>(o.shots)) : std::nullopt, &clamped);
    RecoveryResult res;
    try {
        res = recover(design, y);
    } catch (const linalg::RankDeficientError &e) {
        throw std::runtime_error(std::string(e.what()) + " Increase --q-rows.");
    }
    res.clamped_rows = clamped;

    json j;
    j["circuit"] = absolute(o.circuit);
    j["faults"] = absolute(o.faults);
    if (o.p_given) {
        j["p"] = o.p;
    }
    j["shots"] = o.shots;
    j["seed"] = o.seed;
    j["q_rows"] = rows;
    j["forced"] = !learnable;
    j["dropped_generators"] = prep.dropped;
    j["delta_hat"] = res.delta_hat;
    j["sigma_min"] = res.sigma_min;
    j["sigma_max"] = res.sigma_max;
    j["residual"] = res.residual;
    j["s_hat"] = res.s_hat;
    j["tainted"] = res.tainted();
    j["clamped_rows"] = res.clamped_rows;
    json classes = json::array();
    for (size_t c = 0; c < prior.size(); c++) {
        const PriorClass &pc = prior.classes[c];
        json members = json::array();
        for (size_t m : pc.members) {
            members.push_back(prep.kept[m]);
        }
        size_t rep = prep.kept[pc.representative];
        classes.push_back({{"index", c},
                           {"representative", rep},
                           {"pauli", model.generators()[rep].support.to_string()},
                           {"label", model.generators()[rep].label},
                           {"members", members},
                           {"syndrome", pc.syndrome.to_string()},
                           {"q_model", pc.q},
                           {"q_bar", res.q_bar[c]},
                           {"x_bar", res.x_bar[c]}});
    }
    j["classes"] = classes;
    emit(o, out, j.dump(2));
    return kExitOk;
}

int cmd_predict_lep(const Options &o, std::ostream &out) {
    require(!o.estimate.empty(), "--estimate is required.");
    json est;
    try {
        est = json::parse(read_file(o.estimate));
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("--estimate: " + std::string(e.what()));
    }
    Options src = o;
    src.circuit = est.at("circuit").get<std::string>();
    src.faults = est.at("faults").get<std::string>();
    src.p_given = est.contains("p");
    if (src.p_given) {
        src.p = est["p"].get<double>();
    }
    auto code = load_code(src.circuit);
    FaultModel model = load_model(src, code);
    PreparedModel prep = drop_zero_syndrome(model);
    require(prep.dropped == est.at("dropped_generators").get<std::vector<size_t>>(),
            "--estimate: the fault file no longer matches the estimate (zero-syndrome generators differ).");
    PriorDistribution prior = build_prior(prep.model);
    const json &classes = est.at("classes");
    require(classes.size() == prior.size(), "--estimate: class count differs from the rebuilt prior.");
    std::vector<double> q_bar;
    for (size_t c = 0; c < prior.size(); c++) {
        require(classes[c].at("representative").get<size_t>() == prep.kept[prior.classes[c].representative],
                "--estimate: class " + std::to_string(c) + " representative differs from the rebuilt prior.");
        q_bar.push_back(classes[c].at("q_bar").get<double>());
    }
    if (!o.out.empty()) {
        write_manifest(o, "predict-lep", {o.estimate, src.circuit, src.faults}, {o.out}, false);
    }

    DecoderTable dec = build_decoder(prep.model, prior, o.decoder_weight);
    json reports = json::array();
    for (size_t li : select_logicals(o.logical, code->logical_gens().size())) {
        const SpacetimePauli &l = code->logical_gens()[li];
        LogicalReport rep;
        rep.logical = l.to_string();
        LepPrediction pred = predict_lep(prior, q_bar, prep.model, dec, l, o.max_order);
        rep.p_L_predicted = pred.value;
        rep.truncation_order = pred.order;
        rep.truncation_residual_bound = pred.residual_bound;
        std::string method;
        double ref = reference_lep(prep.model, prior, dec, l, o.max_order, &method);
        if (method != "truncated_prediction") {
            rep.p_L_true = ref;
        }
        if (o.shots > 0) {
            rep.p_L_sampled = sample_lep(prep.model, dec, l, o.shots, o.seed);
        }
        json j;
        j["logical_index"] = li;
        j["logical"] = rep.logical;
        j["p_L_predicted"] = rep.p_L_predicted;
        j["p_L_true"] = rep.p_L_true ? json(*rep.p_L_true) : json(nullptr);
        j["p_L_true_method"] = rep.p_L_true ? json(method) : json(nullptr);
        if (rep.p_L_sampled) {
            j["p_L_sampled"] = {{"rate", rep.p_L_sampled->rate},
                                {"ci_low", rep.p_L_sampled->ci_low},
                                {"ci_high", rep.p_L_sampled->ci_high},
                                {"failures", rep.p_L_sampled->failures},
                                {"shots", rep.p_L_sampled->shots},
                                {"seed", o.seed}};
        } else {
            j["p_L_sampled"] = nullptr;
        }
        j["truncation_order"] = rep.truncation_order;
        j["truncation_residual_bound"] = rep.truncation_residual_bound;
        j["partition"] = "first generator per syndrome class, in declaration order";
        reports.push_back(j);
    }
    emit(o, out, reports.dump(2));
    return kExitOk;
}

int cmd_experiment(const Options &o, std::ostream &out) {
    require(!o.config.empty(), "--config is required.");
    require(!o.out.empty(), "--out (output directory) is required.");
    ExperimentConfig cfg = load_experiment_config(o.config);
    const fs::path dir(o.out);
    const std::string stem = (dir / cfg.name).string();
    fs::create_directories(dir);
    write_manifest(o, "experiment", {o.config}, {stem + ".csv", stem + ".json", stem + ".svg"}, true);
    ScalingResult r = run_experiment(cfg);
    const std::string csv = result_to_csv(r);
    write_file(stem + ".csv", csv);
    write_file(stem + ".json", result_to_json(r) + "\n");
    try {
        write_file(stem + ".svg", plot::render_svg(plot::chart_from_csv(csv, cfg.name)));
    } catch (const std::invalid_argument &e) {
        std::cerr << "experiment: no plot written: " << e.what() << "\n";
    }
    out << "wrote " << stem << ".{csv,json,svg}\n";
    if (r.fit) {
        out << "fit slope " << r.fit->slope << " intercept " << r.fit->intercept << " r2 " << r.fit->r2 << "\n";
    }
    if (r.ratio) {
        out << "shots sampled " << *r.shots_sampled << " predicted " << *r.shots_predicted << " ratio " << *r.ratio
            << "\n";
    }
    for (const auto &n : r.notes) {
        out << "note: " << n << "\n";
    }
    return kExitOk;
}

int cmd_plot(const Options &o, std::ostream &out) {
    require(!o.input.empty(), "--input (CSV) is required.");
    std::string title = fs::path(o.input).stem().string();
    std::string svg = plot::render_svg(plot::chart_from_csv(read_file(o.input), title));
    emit(o, out, svg);
    return kExitOk;
}

int cmd_gen_circuit(const Options &o, std::ostream &out) {
    CircuitSpec c;
    if (o.family == "repetition") {
        c = repetition_circuit(o.d, o.rounds);
    } else if (o.family == "surface") {
        c = rotated_surface_circuit(o.d, o.rounds);
    } else if (o.family == "bacon_shor") {
        c = bacon_shor_circuit(o.d);
    } else {
        throw std::invalid_argument("--family must be repetition, surface or bacon_shor.");
    }
    emit(o, out, circuit_to_json(c));
    return kExitOk;
}

int cmd_gen_faults(const Options &o, std::ostream &out) {
    auto code = load_code(o.circuit);
    auto entries = fault_template(code->circuit(), parse_template_kind(o.fault_template));
    emit(o, out, template_to_json(entries, o.p));
    return kExitOk;
}

int cmd_sample(const Options &o, std::ostream &out) {
    require(o.shots > 0, "--shots must be positive.");
    auto code = load_code(o.circuit);
    FaultModel model = load_model(o, code);
    if (!o.out.empty()) {
        write_manifest(o, "sample", {o.circuit, o.faults}, {o.out}, false);
    }
    ShotSet shots = sample_shots(model, o.shots, o.seed);
    const bool csv = o.out.empty() || fs::path(o.out).extension() == ".csv";
    if (o.out.empty()) {
        write_shots_csv(out, shots);
        return kExitOk;
    }
    ensure_parent(o.out);
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + o.out + "'.");
    }
    if (csv) {
        write_shots_csv(f, shots);
    } else {
        write_shots_binary(f, shots);
    }
    return kExitOk;
}

}  // namespace synlearn::cli
