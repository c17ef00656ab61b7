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

#include "synlearn/experiments/experiments.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "synlearn/estimator/estimator.h"
#include "synlearn/gf2/real.h"
#include "synlearn/sampler/philox.h"
#include "synlearn/spacetime/circuit_io.h"
#include "synlearn/spacetime/generators.h"
#include "synlearn/util/parallel.h"

namespace synlearn {

using json = nlohmann::json;

const char *experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::kAccuracyVsShots:
            return "accuracy_vs_shots";
        case ExperimentKind::kShotsVsP:
            return "shots_vs_p";
        case ExperimentKind::kLepComparison:
            return "lep_comparison";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (auto k : {ExperimentKind::kAccuracyVsShots, ExperimentKind::kShotsVsP, ExperimentKind::kLepComparison}) {
        if (name == experiment_kind_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument(
        "unknown experiment kind '" + std::string(name) +
        "' (expected accuracy_vs_shots, shots_vs_p or lep_comparison).");
}

void ExperimentConfig::validate() const {
    auto fail = [&](const std::string &msg) { throw std::invalid_argument("experiment '" + name + "': " + msg); };
    if (instance.empty()) {
        fail("instance is empty.");
    }
    if (p_grid.empty()) {
        fail("p_grid is empty.");
    }
    if (shot_grid.empty()) {
        fail("shot_grid is empty.");
    }
    if (trials == 0) {
        fail("trials must be at least 1.");
    }
    for (double p : p_grid) {
        if (!(p > 0 && p < 0.5)) {
            fail("p values must lie in (0, 1/2).");
        }
    }
    for (uint64_t n : shot_grid) {
        if (n == 0) {
            fail("shot counts must be positive.");
        }
    }
    if (!std::is_sorted(shot_grid.begin(), shot_grid.end())) {
        fail("shot_grid must be increasing.");
    }
    if (!(tau_target > 0)) {
        fail("tau_target must be positive.");
    }
    if (!(rel_err_target > 0)) {
        fail("rel_err_target must be positive.");
    }
    if (decoder_weight == 0) {
        fail("decoder_weight must be at least 1.");
    }
}

ExperimentConfig parse_experiment_config(std::string_view text, const std::string &base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("experiment config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("experiment config: top level must be an object.");
    }
    static const char *known[] = {"name",      "kind",     "instance",       "template",       "p_grid",
                                  "shot_grid", "trials",   "seed",           "tau_target",     "max_order",
                                  "q_rows",    "logical",  "rel_err_target", "decoder_weight", "comment"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known)) {
            throw std::invalid_argument("experiment config: unknown key '" + it.key() + "'.");
        }
    }
    ExperimentConfig c;
    c.base_dir = base_dir;
    try {
        c.name = j.value("name", c.name);
        if (j.contains("kind")) {
            c.kind = parse_experiment_kind(j["kind"].get<std::string>());
        }
        c.instance = j.value("instance", std::string());
        if (j.contains("template")) {
            c.fault_template = parse_template_kind(j["template"].get<std::string>());
        }
        c.p_grid = j.value("p_grid", std::vector<double>());
        if (j.contains("shot_grid")) {
            for (const auto &v : j["shot_grid"]) {
                double d = v.get<double>();
                if (!(d >= 1) || d != std::floor(d)) {
                    throw std::invalid_argument("experiment config: shot counts must be positive integers.");
                }
                c.shot_grid.push_back(static_cast<uint64_t>(d));
            }
        }
        c.trials = j.value("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        c.tau_target = j.value("tau_target", c.tau_target);
        c.max_order = j.value("max_order", c.max_order);
        c.q_rows = j.value("q_rows", c.q_rows);
        c.logical = j.value("logical", c.logical);
        c.rel_err_target = j.value("rel_err_target", c.rel_err_target);
        c.decoder_weight = j.value("decoder_weight", c.decoder_weight);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("experiment config: ") + e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_experiment_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open experiment config '" + path + "'.");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_experiment_config(ss.str(), dir.empty() ? "." : dir);
}

std::string experiment_config_to_json(const ExperimentConfig &c) {
    json j;
    j["name"] = c.name;
    j["kind"] = experiment_kind_name(c.kind);
    j["instance"] = c.instance;
    j["template"] = c.fault_template == TemplateKind::kBitflip ? "bitflip" : "depolarize";
    j["p_grid"] = c.p_grid;
    j["shot_grid"] = c.shot_grid;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["tau_target"] = c.tau_target;
    j["max_order"] = c.max_order;
    j["q_rows"] = c.q_rows;
    j["logical"] = c.logical;
    j["rel_err_target"] = c.rel_err_target;
    j["decoder_weight"] = c.decoder_weight;
    return j.dump(2);
}

ExperimentInstance make_instance(const std::string &name, const CircuitSpec &circuit, TemplateKind kind) {
    ExperimentInstance inst;
    inst.name = name;
    inst.code = std::make_shared<const SpacetimeCode>(build_spacetime_code(circuit));
    inst.entries = fault_template(circuit, kind);
    return inst;
}

ExperimentInstance load_instance(const ExperimentConfig &cfg) {
    const std::string &spec = cfg.instance;
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(spec.substr(prefix.size()));
        for (std::string part; std::getline(ss, part, ':');) {
            parts.push_back(part);
        }
        auto num = [&](size_t i) -> size_t {
            if (i >= parts.size()) {
                throw std::invalid_argument("instance '" + spec + "': missing parameter.");
            }
            try {
                return static_cast<size_t>(std::stoul(parts[i]));
            } catch (const std::exception &) {
                throw std::invalid_argument("instance '" + spec + "': bad number '" + parts[i] + "'.");
            }
        };
        CircuitSpec c;
        if (!parts.empty() && parts[0] == "repetition") {
            c = repetition_circuit(num(1), num(2));
        } else if (!parts.empty() && parts[0] == "surface") {
            c = rotated_surface_circuit(num(1), num(2));
        } else if (!parts.empty() && parts[0] == "bacon_shor") {
            c = bacon_shor_circuit(num(1));
        } else {
            throw std::invalid_argument("instance '" + spec + "': unknown builtin family.");
        }
        return make_instance(spec, c, cfg.fault_template);
    }
    std::filesystem::path path(spec);
    if (path.is_relative()) {
        path = std::filesystem::path(cfg.base_dir) / path;
    }
    return make_instance(spec, load_circuit(path.string()), cfg.fault_template);
}

uint64_t trial_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t trial) {
    // One Philox block keyed on the base seed; the counter carries the grid
    // coordinates, so distinct coordinates give independent seeds.
    auto out = philox4x32_10(
        {static_cast<uint32_t>(trial), static_cast<uint32_t>(trial >> 32), static_cast<uint32_t>(a),
         static_cast<uint32_t>(b)},
        {static_cast<uint32_t>(base), static_cast<uint32_t>(base >> 32)});
    return (static_cast<uint64_t>(out[1]) << 32) | out[0];
}

PriorTrial run_prior_trial(
    const FaultModel &model, const PriorDistribution &prior, uint64_t shots, size_t q_rows, uint64_t seed) {
    const SpacetimeCode &code = model.code();
    const size_t K = prior.size();
    PriorTrial t;
    t.q_true = prior.coefficients();
    if (K == 0) {
        return t;
    }
    ShotSet data = sample_shots(model, shots, seed);
    const size_t rows = q_rows == 0 ? default_q_rows(K) : q_rows;
    // A drawn design can be rank deficient by bad luck; redraw a few times.
    for (uint64_t attempt = 0;; attempt++) {
        SubsampleDesign design = draw_design(code, prior, rows, seed + attempt);
        auto est = estimate_eigenvalues(data, design.rows);
        std::vector<size_t> clamped;
        auto y = log_targets(est, 1.0 / static_cast<double>(shots), &clamped);
        try {
            RecoveryResult r = recover(design, y);
            t.q_bar = r.q_bar;
            t.delta_hat = r.delta_hat;
            break;
        } catch (const linalg::RankDeficientError &) {
            if (attempt >= 7) {
                throw;
            }
        }
    }
    for (size_t c = 0; c < K; c++) {
        double denom = std::abs(t.q_true[c]);
        double err = std::abs(t.q_bar[c] - t.q_true[c]);
        t.tau = std::max(t.tau, denom > 0 ? err / denom : err);
    }
    return t;
}

namespace {

struct ModelAt {
    FaultModel model;
    PriorDistribution prior;
};

ModelAt model_at(const ExperimentInstance &inst, double p) {
    FaultModel m = instantiate_template(inst.code, inst.entries, p);
    PriorDistribution prior = build_prior(m);
    return {std::move(m), std::move(prior)};
}

std::vector<AccuracyPoint> accuracy_points(
    const ExperimentInstance &inst, const ExperimentConfig &cfg, size_t p_index) {
    const double p = cfg.p_grid[p_index];
    ModelAt m = model_at(inst, p);
    std::vector<AccuracyPoint> out;
    for (size_t ni = 0; ni < cfg.shot_grid.size(); ni++) {
        AccuracyPoint pt;
        pt.p = p;
        pt.shots = cfg.shot_grid[ni];
        pt.trials = cfg.trials;
        pt.seed = cfg.seed;
        pt.taus.assign(cfg.trials, 0.0);
        parallel::parallel_for(cfg.trials, [&](size_t t) {
            uint64_t s = trial_seed(cfg.seed, p_index, ni, t);
            pt.taus[t] = run_prior_trial(m.model, m.prior, pt.shots, cfg.q_rows, s).tau;
        });
        pt.tau_median = stats::median(pt.taus);
        pt.tau_q25 = stats::quantile(pt.taus, 0.25);
        pt.tau_q75 = stats::quantile(pt.taus, 0.75);
        out.push_back(std::move(pt));
    }
    return out;
}

std::optional<stats::LinearFit> try_fit(const std::vector<double> &xs, const std::vector<double> &ys,
                                        std::vector<std::string> &notes, const std::string &what) {
    std::vector<double> fx;
    std::vector<double> fy;
    for (size_t i = 0; i < xs.size(); i++) {
        if (xs[i] > 0 && ys[i] > 0) {
            fx.push_back(xs[i]);
            fy.push_back(ys[i]);
        }
    }
    if (fx.size() < xs.size()) {
        notes.push_back(what + ": " + std::to_string(xs.size() - fx.size()) + " nonpositive point(s) excluded from the fit.");
    }
    if (fx.size() < 2) {
        notes.push_back(what + ": fewer than two usable points, no fit.");
        return std::nullopt;
    }
    try {
        return stats::fit_loglog(fx, fy);
    } catch (const std::invalid_argument &e) {
        notes.push_back(what + ": " + e.what());
        return std::nullopt;
    }
}

}  // namespace

ScalingResult run_accuracy_vs_shots(const ExperimentInstance &inst, const ExperimentConfig &cfg) {
    cfg.validate();
    ScalingResult r;
    r.kind = ExperimentKind::kAccuracyVsShots;
    r.name = cfg.name;
    r.instance = inst.name;
    r.accuracy = accuracy_points(inst, cfg, 0);
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &pt : r.accuracy) {
        xs.push_back(static_cast<double>(pt.shots));
        ys.push_back(pt.tau_median);
    }
    r.fit = try_fit(xs, ys, r.notes, "tau median vs shots");
    return r;
}

ScalingResult run_shots_vs_p(const ExperimentInstance &inst, const ExperimentConfig &cfg) {
    cfg.validate();
    ScalingResult r;
    r.kind = ExperimentKind::kShotsVsP;
    r.name = cfg.name;
    r.instance = inst.name;
    std::vector<double> ps;
    std::vector<double> ns;
    for (size_t pi = 0; pi < cfg.p_grid.size(); pi++) {
        auto pts = accuracy_points(inst, cfg, pi);
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto &pt : pts) {
            xs.push_back(static_cast<double>(pt.shots));
            ys.push_back(pt.tau_median);
        }
        ShotsPoint sp;
        sp.p = cfg.p_grid[pi];
        sp.shots_needed = stats::loglog_crossing(xs, ys, cfg.tau_target);
        if (sp.shots_needed) {
            ps.push_back(sp.p);
            ns.push_back(*sp.shots_needed);
        } else {
            std::ostringstream note;
            note << "p = " << sp.p << ": tau_target " << cfg.tau_target << " not bracketed by the shot grid; point dropped.";
            r.notes.push_back(note.str());
        }
        r.accuracy.insert(r.accuracy.end(), pts.begin(), pts.end());
        r.shots_needed.push_back(sp);
    }
    r.fit = try_fit(ps, ns, r.notes, "shots needed vs p");
    return r;
}

double reference_lep(
    const FaultModel &model, const PriorDistribution &prior, const DecoderTable &dec, const SpacetimePauli &l,
    size_t max_order, std::string *method) {
    const SpacetimeCode &code = model.code();
    auto set = [&](const char *m) {
        if (method != nullptr) {
            *method = m;
        }
    };
    if (code.num_meas() + code.logical_gens().size() <= kExactLepDenseMaxBits) {
        set("exact_dense");
        return exact_lep_dense(model, dec, l);
    }
    if (model.size() <= kExactLepMaxGenerators) {
        set("exact_enumeration");
        return exact_lep(model, dec, l);
    }
    set("truncated_prediction");
    return predict_lep(prior, model, dec, l, max_order).value;
}

ScalingResult run_lep_comparison(const ExperimentInstance &inst, const ExperimentConfig &cfg) {
    cfg.validate();
    ScalingResult r;
    r.kind = ExperimentKind::kLepComparison;
    r.name = cfg.name;
    r.instance = inst.name;
    const SpacetimeCode &code = *inst.code;
    if (cfg.logical >= code.logical_gens().size()) {
        throw std::invalid_argument(
            "experiment '" + cfg.name + "': logical index " + std::to_string(cfg.logical) + " out of range (" +
            std::to_string(code.logical_gens().size()) + " logical generators).");
    }
    const double p = cfg.p_grid[0];
    ModelAt m = model_at(inst, p);
    DecoderTable dec = build_decoder(m.model, m.prior, cfg.decoder_weight);
    const SpacetimePauli &l = code.logical_gens()[cfg.logical];
    r.p_true = reference_lep(m.model, m.prior, dec, l, cfg.max_order, &r.p_true_method);
    r.residual_bound = predict_lep(m.prior, m.model, dec, l, cfg.max_order).residual_bound;
    if (!(r.p_true > 0)) {
        throw std::runtime_error("experiment '" + cfg.name + "': reference LEP is zero; relative error undefined.");
    }

    std::vector<double> xs;
    std::vector<double> rel_s;
    std::vector<double> rel_p;
    for (size_t ni = 0; ni < cfg.shot_grid.size(); ni++) {
        LepPoint pt;
        pt.p = p;
        pt.shots = cfg.shot_grid[ni];
        pt.trials = cfg.trials;
        pt.seed = cfg.seed;
        std::vector<double> sampled(cfg.trials);
        std::vector<double> predicted(cfg.trials);
        parallel::parallel_for(cfg.trials, [&](size_t t) {
            sampled[t] = sample_lep(m.model, dec, l, pt.shots, trial_seed(cfg.seed, 1, ni, t)).rate;
            PriorTrial pr = run_prior_trial(m.model, m.prior, pt.shots, cfg.q_rows, trial_seed(cfg.seed, 2, ni, t));
            predicted[t] = predict_lep(m.prior, pr.q_bar, m.model, dec, l, cfg.max_order).value;
        });
        pt.sampled_mean = stats::mean(sampled);
        pt.sampled_std = stats::sample_std(sampled);
        pt.predicted_mean = stats::mean(predicted);
        pt.predicted_std = stats::sample_std(predicted);
        pt.binomial_rel_err = std::sqrt((1 - r.p_true) / (r.p_true * static_cast<double>(pt.shots)));
        xs.push_back(static_cast<double>(pt.shots));
        rel_s.push_back(pt.sampled_std / r.p_true);
        rel_p.push_back(pt.predicted_std / r.p_true);
        r.lep.push_back(pt);
    }
    r.fit_sampled = try_fit(xs, rel_s, r.notes, "sampled rel_err vs shots");
    r.fit_predicted = try_fit(xs, rel_p, r.notes, "predicted rel_err vs shots");
    auto solve = [&](const std::optional<stats::LinearFit> &f) -> std::optional<double> {
        if (!f || f->slope >= 0) {
            return std::nullopt;
        }
        return std::pow(10.0, (std::log10(cfg.rel_err_target) - f->intercept) / f->slope);
    };
    r.shots_sampled = solve(r.fit_sampled);
    r.shots_predicted = solve(r.fit_predicted);
    if (r.shots_sampled && r.shots_predicted) {
        r.ratio = *r.shots_sampled / *r.shots_predicted;
    } else {
        r.notes.push_back("shot ratio unavailable: a fit is missing or not decreasing.");
    }
    return r;
}

ScalingResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    ExperimentInstance inst = load_instance(cfg);
    switch (cfg.kind) {
        case ExperimentKind::kAccuracyVsShots:
            return run_accuracy_vs_shots(inst, cfg);
        case ExperimentKind::kShotsVsP:
            return run_shots_vs_p(inst, cfg);
        case ExperimentKind::kLepComparison:
            return run_lep_comparison(inst, cfg);
    }
    throw std::logic_error("run_experiment: unhandled kind.");
}

namespace {

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

json fit_json(const std::optional<stats::LinearFit> &f) {
    if (!f) {
        return nullptr;
    }
    return json{{"slope", f->slope}, {"intercept", f->intercept}, {"r2", f->r2}, {"points", f->points}};
}

template <typename T>
json opt_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string result_to_csv(const ScalingResult &r) {
    std::ostringstream out;
    switch (r.kind) {
        case ExperimentKind::kAccuracyVsShots:
            out << "instance,p,shots,trials,seed,tau_median,tau_q25,tau_q75\n";
            for (const auto &pt : r.accuracy) {
                out << r.instance << ',' << num(pt.p) << ',' << pt.shots << ',' << pt.trials << ',' << pt.seed << ','
                    << num(pt.tau_median) << ',' << num(pt.tau_q25) << ',' << num(pt.tau_q75) << '\n';
            }
            break;
        case ExperimentKind::kShotsVsP:
            out << "instance,p,shots_needed\n";
            for (const auto &pt : r.shots_needed) {
                out << r.instance << ',' << num(pt.p) << ',' << (pt.shots_needed ? num(*pt.shots_needed) : "") << '\n';
            }
            break;
        case ExperimentKind::kLepComparison:
            out << "instance,p,shots,trials,seed,predicted,predicted_std,sampled,sampled_std,exact,residual_bound\n";
            for (const auto &pt : r.lep) {
                out << r.instance << ',' << num(pt.p) << ',' << pt.shots << ',' << pt.trials << ',' << pt.seed << ','
                    << num(pt.predicted_mean) << ',' << num(pt.predicted_std) << ',' << num(pt.sampled_mean) << ','
                    << num(pt.sampled_std) << ',' << num(r.p_true) << ',' << num(r.residual_bound) << '\n';
            }
            break;
    }
    return out.str();
}

std::string result_to_json(const ScalingResult &r) {
    json j;
    j["kind"] = experiment_kind_name(r.kind);
    j["name"] = r.name;
    j["instance"] = r.instance;
    j["fit"] = fit_json(r.fit);
    json acc = json::array();
    for (const auto &pt : r.accuracy) {
        acc.push_back({{"p", pt.p},
                       {"shots", pt.shots},
                       {"trials", pt.trials},
                       {"seed", pt.seed},
                       {"tau_median", pt.tau_median},
                       {"tau_q25", pt.tau_q25},
                       {"tau_q75", pt.tau_q75},
                       {"taus", pt.taus}});
    }
    j["accuracy"] = acc;
    json need = json::array();
    for (const auto &pt : r.shots_needed) {
        need.push_back({{"p", pt.p}, {"shots_needed", opt_json(pt.shots_needed)}});
    }
    j["shots_needed"] = need;
    if (r.kind == ExperimentKind::kLepComparison) {
        json lep = json::array();
        for (const auto &pt : r.lep) {
            lep.push_back({{"p", pt.p},
                           {"shots", pt.shots},
                           {"trials", pt.trials},
                           {"seed", pt.seed},
                           {"predicted_mean", pt.predicted_mean},
                           {"predicted_std", pt.predicted_std},
                           {"sampled_mean", pt.sampled_mean},
                           {"sampled_std", pt.sampled_std},
                           {"binomial_rel_err", pt.binomial_rel_err}});
        }
        j["lep"] = lep;
        j["p_true"] = r.p_true;
        j["p_true_method"] = r.p_true_method;
        j["residual_bound"] = r.residual_bound;
        j["fit_sampled"] = fit_json(r.fit_sampled);
        j["fit_predicted"] = fit_json(r.fit_predicted);
        j["shots_sampled"] = opt_json(r.shots_sampled);
        j["shots_predicted"] = opt_json(r.shots_predicted);
        j["ratio"] = opt_json(r.ratio);
    }
    j["notes"] = r.notes;
    return j.dump(2);
}

}  // namespace synlearn
