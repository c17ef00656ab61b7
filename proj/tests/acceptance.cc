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

// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and
// runtime budgets are pinned below; a criterion fails if its check fails or
// its wall time exceeds the budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "instances.h"
#include "synlearn/estimator/estimator.h"
#include "synlearn/experiments/experiments.h"
#include "synlearn/learnability/learnability.h"
#include "synlearn/lep/lep.h"
#include "synlearn/sampler/sampler.h"

using namespace synlearn;
using namespace synlearn::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr double kOracleTol = 1e-12;         // criterion 4
constexpr double kNoiselessTol = 1e-10;      // criterion 3
constexpr size_t kFrameSubsets = 10000;      // criterion 2
constexpr size_t kNoisySeeds = 100;          // criterion 5
constexpr double kInjectedEps = 1e-4;        // criterion 5
constexpr size_t kNoisyRowsPerClass = 8;     // 4K rows leave delta_hat >= 1 on most seeds
constexpr size_t kPrecisionRuns = 100;       // criterion 6
constexpr size_t kPrecisionMaxViolations = 7;
constexpr double kSlopeTarget = -2.0;        // criterion 7, N vs tau
constexpr double kSlopeTol = 0.3;
constexpr double kExponentTarget = -1.0;     // criterion 8
constexpr double kExponentTol = 0.2;
constexpr double kMinR2 = 0.9;
constexpr double kMinShotRatio = 10.0;       // criterion 9
constexpr double kWitnessTol = 1e-9;         // criterion 10

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Outcome golden_dims() {
    std::ostringstream msg;
    bool ok = true;
    auto expect = [&](const char *what, size_t got, size_t want) {
        msg << what << "=" << got << (got == want ? "" : "(want " + std::to_string(want) + ")") << " ";
        ok &= got == want;
    };
    CircuitSpec rc = repetition_circuit(3, 3);
    SpacetimeCode rep = build_spacetime_code(rc);
    expect("rep.gauge", rep.dims().gauge_rank, 32);
    expect("rep.M", rep.dims().M, 8);
    expect("rep.k", rep.dims().k, 1);
    const SpacetimeLayout lay = rep.layout();
    SpacetimePauli lx = propagate_backward(rc, SpacetimePauli::on_slice(lay, 6, PauliString::parse("X1X2X3", 3)));
    SpacetimePauli lz = propagate_backward(rc, SpacetimePauli::on_slice(lay, 6, PauliString::parse("Z1", 3)));
    bool logicals = rep.logical_gens().size() == 2 && rep.logical_gens()[0] == lx && rep.logical_gens()[1] == lz;
    msg << "rep.logicals=" << (logicals ? "ok" : "MISMATCH") << " ";
    ok &= logicals;

    SpacetimeCode bs2 = build_spacetime_code(bacon_shor_circuit(2));
    expect("bs2.gauge", bs2.dims().gauge_rank, 16);
    expect("bs2.M", bs2.dims().M, 6);
    expect("bs2.logicals", bs2.dims().logical_count, 2);
    SpacetimeCode bs3 = build_spacetime_code(bacon_shor_circuit(3));
    expect("bs3.gauge", bs3.dims().gauge_rank, 72);
    expect("bs3.M", bs3.dims().M, 16);
    expect("bs3.k", bs3.dims().k, 1);
    return {ok, msg.str()};
}

Outcome frame_invariance() {
    FaultModel model = repetition_model(3, 3, 5e-4);
    const SpacetimeCode &code = model.code();
    PriorDistribution prior = build_prior(model);
    DecoderTable dec = build_decoder(model, prior, 4);
    std::mt19937_64 rng(2024);
    std::bernoulli_distribution pick(0.15);
    size_t agree = 0;
    size_t total = 0;
    size_t failures = 0;
    for (size_t s = 0; s < kFrameSubsets; s++) {
        SpacetimePauli f(code.layout());
        for (const auto &g : model.generators()) {
            if (pick(rng)) {
                f *= g.support;
            }
        }
        SpacetimePauli r = f * dec.correction(code.syndrome(f));
        for (size_t li = 0; li < code.logical_gens().size(); li++) {
            bool rest = fails_rest_frame(code, r, code.logical_gens()[li]);
            bool term = fails_terminal_frame(code, r, code.base_logicals()[li]);
            agree += rest == term;
            failures += rest;
            total++;
        }
    }
    std::ostringstream msg;
    msg << agree << "/" << total << " agree over " << kFrameSubsets << " subsets (" << failures << " failing)";
    return {agree == total && failures > 0, msg.str()};
}

Outcome noiseless_recovery() {
    std::ostringstream msg;
    bool ok = true;
    std::vector<std::pair<std::string, FaultModel>> models;
    models.emplace_back("rep_d3_r3", repetition_model(3, 3, 5e-4));
    models.emplace_back("rep_d5_r5", repetition_model(5, 5, 5e-4));
    models.emplace_back("surface_d3_r1", surface_model(3, 1, 5e-4));
    for (const auto &[name, model] : models) {
        PriorDistribution prior = build_prior(model);
        SubsampleDesign design = draw_design(model.code(), prior, default_q_rows(prior.size()), 11);
        std::vector<double> y;
        for (const auto &mu : design.rows) {
            y.push_back(-std::log(eigenvalue(model, meas_product(model.code(), mu))));
        }
        RecoveryResult r = recover(design, y);
        double worst = 0;
        for (size_t c = 0; c < prior.size(); c++) {
            worst = std::max(worst, std::abs(r.q_bar[c] - prior.classes[c].q));
        }
        ok &= prior.size() <= 200 && worst <= kNoiselessTol;
        msg << name << " K=" << prior.size() << " max|dq|=" << fmt("%.1e", worst) << " ";
    }
    return {ok, msg.str()};
}

Outcome oracle_equivalence() {
    std::ostringstream msg;
    FaultModel model = repetition_model(3, 1, 0.02);
    PriorDistribution prior = build_prior(model);
    DecoderTable dec = build_decoder(model, prior, 4);
    bool ok = model.size() <= 14;
    for (size_t li = 0; li < model.code().logical_gens().size(); li++) {
        const SpacetimePauli &l = model.code().logical_gens()[li];
        double exact = exact_lep(model, dec, l);
        double pred = predict_lep(prior, model, dec, l, prior.size()).value;
        LepSample s = sample_lep(model, dec, l, 1000000, 4242);
        bool eq = std::abs(pred - exact) <= kOracleTol;
        bool in_ci = s.ci_low <= exact && exact <= s.ci_high;
        ok &= eq && in_ci;
        msg << "l" << li << ": exact=" << fmt("%.6e", exact) << " |pred-exact|=" << fmt("%.1e", std::abs(pred - exact))
            << " sampled=" << fmt("%.4e", s.rate) << (in_ci ? " in CI; " : " OUTSIDE CI; ");
    }
    msg << "K=" << model.size();
    return {ok, msg.str()};
}

Outcome noisy_bound() {
    FaultModel model = repetition_model(3, 3, 5e-4);
    PriorDistribution prior = build_prior(model);
    size_t violations = 0;
    size_t vacuous = 0;
    double worst_ratio = 0;
    double max_delta = 0;
    for (size_t seed = 0; seed < kNoisySeeds; seed++) {
        SubsampleDesign design = draw_design(model.code(), prior, kNoisyRowsPerClass * prior.size(), 1000 + seed);
        std::vector<double> y = exact_targets(design, prior);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> noise(-kInjectedEps, kInjectedEps);
        for (double &v : y) {
            v += noise(rng);
        }
        RecoveryResult r = recover(design, y);
        double d = r.delta_hat;
        max_delta = std::max(max_delta, d);
        if (!(d < 1)) {
            vacuous++;
            continue;
        }
        double bound = std::sqrt(1 + d) / (1 - d) * kInjectedEps;
        for (size_t c = 0; c < prior.size(); c++) {
            double err = std::abs(r.q_bar[c] - prior.classes[c].q);
            worst_ratio = std::max(worst_ratio, err / bound);
            violations += err > bound;
        }
    }
    std::ostringstream msg;
    msg << violations << " violations over " << kNoisySeeds << " seeds (" << vacuous
        << " with delta_hat >= 1), worst err/bound=" << fmt("%.3f", worst_ratio)
        << ", max delta_hat=" << fmt("%.3f", max_delta) << ", q_rows=" << kNoisyRowsPerClass << "K";
    return {violations == 0 && vacuous == 0, msg.str()};
}

Outcome variance_aware() {
    const double eps = 0.01;
    const double tau = 0.2;
    const uint64_t S = shots_for_precision(eps, tau, 0.05);
    FaultModel base = repetition_model(3, 1, 1e-3);
    FaultGenerator g = base.generators()[0];
    g.q = eps;
    FaultModel model(base.code_ptr(), {g});
    gf2::BitVec mu(model.code().num_meas());
    mu.set(*model.syndrome(0).first_set());
    size_t violations = 0;
    for (size_t run = 0; run < kPrecisionRuns; run++) {
        ShotSet shots = sample_shots(model, S, trial_seed(77, 0, 0, run));
        double e = estimate_eigenvalue(shots, mu).bern_rate;
        violations += std::abs(e - eps) > tau * eps;
    }
    std::ostringstream msg;
    msg << "S=" << S << ", " << violations << "/" << kPrecisionRuns << " runs outside tau*eps (limit "
        << kPrecisionMaxViolations << ")";
    return {violations <= kPrecisionMaxViolations, msg.str()};
}

ExperimentConfig rep_config(ExperimentKind kind) {
    ExperimentConfig c;
    c.kind = kind;
    c.instance = "builtin:repetition:3:3";
    c.fault_template = TemplateKind::kBitflip;
    return c;
}

Outcome accuracy_scaling() {
    ExperimentConfig c = rep_config(ExperimentKind::kAccuracyVsShots);
    c.name = "accuracy_scaling";
    c.p_grid = {5e-4};
    c.shot_grid = {10000, 30000, 100000, 300000};
    c.trials = 30;
    c.seed = 1;
    ScalingResult r = run_experiment(c);
    if (!r.fit) {
        return {false, "no fit"};
    }
    double n_vs_tau = 1.0 / r.fit->slope;
    std::ostringstream msg;
    msg << "tau~N^" << fmt("%.3f", r.fit->slope) << " => N~tau^" << fmt("%.3f", n_vs_tau)
        << " r2=" << fmt("%.3f", r.fit->r2);
    return {std::abs(n_vs_tau - kSlopeTarget) <= kSlopeTol && r.fit->r2 >= kMinR2, msg.str()};
}

Outcome shots_scaling() {
    ExperimentConfig c = rep_config(ExperimentKind::kShotsVsP);
    c.name = "shots_scaling";
    c.p_grid = {2e-4, 5e-4, 1e-3, 2e-3};
    c.shot_grid = {3000, 10000, 30000, 100000, 300000, 1000000};
    c.tau_target = 0.5;
    c.trials = 20;
    c.seed = 2;
    ScalingResult r = run_experiment(c);
    if (!r.fit) {
        return {false, "no fit"};
    }
    std::ostringstream msg;
    msg << "N~p^" << fmt("%.3f", r.fit->slope) << " r2=" << fmt("%.3f", r.fit->r2) << " over " << r.fit->points
        << " points";
    return {std::abs(r.fit->slope - kExponentTarget) <= kExponentTol && r.fit->r2 >= kMinR2 &&
                r.fit->points == c.p_grid.size(),
            msg.str()};
}

Outcome lep_scaling() {
    ExperimentConfig c = rep_config(ExperimentKind::kLepComparison);
    c.name = "lep_scaling";
    c.p_grid = {5e-4};
    c.shot_grid = {30000, 100000, 300000, 1000000, 3000000};
    c.trials = 20;
    c.seed = 3;
    ScalingResult r = run_experiment(c);
    if (!r.ratio) {
        return {false, "no shot ratio"};
    }
    bool fits = r.fit_sampled->r2 >= kMinR2 && r.fit_predicted->r2 >= kMinR2;
    std::ostringstream msg;
    msg << "p_L=" << fmt("%.3e", r.p_true) << " (" << r.p_true_method << "), N_sampled=" << fmt("%.3g", *r.shots_sampled)
        << " N_predicted=" << fmt("%.3g", *r.shots_predicted) << " ratio=" << fmt("%.1f", *r.ratio)
        << " r2=" << fmt("%.2f", r.fit_sampled->r2) << "/" << fmt("%.2f", r.fit_predicted->r2);
    return {fits && *r.ratio >= kMinShotRatio, msg.str()};
}

Outcome witness() {
    const double qa = 0.03;
    const double qc = 0.005;
    FaultModel m1 = dressed_repetition_model(0.01, qa, qc);
    FaultModel m2 = dressed_repetition_model(0.01, qc, qa);
    LearnabilityReport rep = analyze(m1);
    const size_t dressed = m1.size() - 1;
    bool c_label = rep.labels[dressed] == Label::kC;
    PriorDistribution p1 = build_prior(m1);
    PriorDistribution p2 = build_prior(m2);
    bool same_prior = p1.size() == p2.size();
    double prior_diff = 0;
    for (size_t c = 0; same_prior && c < p1.size(); c++) {
        same_prior &= p1.classes[c].members == p2.classes[c].members;
        prior_diff = std::max(prior_diff, std::abs(p1.classes[c].q - p2.classes[c].q));
    }
    same_prior &= prior_diff <= 1e-15;
    DecoderTable dec = build_decoder(m1, p1, 4);
    const SpacetimePauli &l = m1.code().logical_gens()[0];
    double e1 = exact_lep(m1, dec, l);
    double e2 = exact_lep(m2, dec, l);
    std::ostringstream msg;
    msg << "C-label=" << (c_label ? "yes" : "no") << " max|dprior|=" << fmt("%.1e", prior_diff)
        << " exact_lep=" << fmt("%.6e", e1) << " vs " << fmt("%.6e", e2);
    return {c_label && same_prior && std::abs(e1 - e2) > kWitnessTol, msg.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "worked-example golden dims", 1, golden_dims},
        {2, "frame invariance of the failure test", 10, frame_invariance},
        {3, "noiseless recovery identity", 5, noiseless_recovery},
        {4, "oracle equivalence of LEP estimators", 60, oracle_equivalence},
        {5, "noisy recovery bound", 30, noisy_bound},
        {6, "variance-aware sampling", 60, variance_aware},
        {7, "accuracy vs shots scaling", 600, accuracy_scaling},
        {8, "shots vs p scaling", 1200, shots_scaling},
        {9, "predicted vs sampled LEP shot ratio", 1200, lep_scaling},
        {10, "unlearnability witness", 10, witness},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs <= c.budget_s;
        bool pass = o.pass && in_budget;
        failed += !pass;
        std::printf("[%s] %2d %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_s, in_budget ? "" : ", OVER BUDGET");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
