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

#include <CLI11.hpp>
#include <exception>
#include <functional>
#include <iostream>
#include <map>

#include "commands.h"
#include "synlearn/util/parallel.h"

using synlearn::cli::Options;

int main(int argc, char **argv) {
    Options o;
    o.argv.assign(argv, argv + argc);
    size_t threads = 0;

    CLI::App app{"synlearn: learn syndrome priors and predict logical error rates of syndrome extraction circuits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "synlearn 0.1.0");

    using Cmd = std::function<int(const Options &, std::ostream &)>;
    std::map<CLI::App *, Cmd> handlers;
    auto add = [&](const char *name, const char *help, Cmd fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--threads", threads, "Worker threads (SYNLEARN_THREADS overrides)");
        handlers[sub] = std::move(fn);
        return sub;
    };

    auto *build = add("build-code", "Map a circuit to its spacetime code and print the dimension table",
                      synlearn::cli::cmd_build_code);
    build->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    build->add_option("--out", o.out, "Write the code (generators as Pauli literals) as JSON");

    auto *learn = add("check-learnability", "Label generators A/B/C; exit 2 when not learnable",
                      synlearn::cli::cmd_check_learnability);
    learn->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    learn->add_option("--faults", o.faults, "Fault model JSON")->required();
    learn->add_option("--out", o.out, "Write the report as JSON");

    auto *estimate = add("estimate", "Sample syndromes and recover the prior distribution", synlearn::cli::cmd_estimate);
    estimate->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    estimate->add_option("--faults", o.faults, "Fault model JSON")->required();
    estimate->add_option("--shots", o.shots, "Shot count")->required();
    estimate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    estimate->add_option("--q-rows", o.q_rows, "Design rows (0: max(4K, K+16))")->capture_default_str();
    estimate->add_flag("--force", o.force, "Estimate even when the model is not learnable");
    estimate->add_flag("--clamp", o.clamp, "Clamp nonpositive eigenvalue estimates to 1/shots (taints the result)");
    estimate->add_option("--out", o.out, "Output JSON (default stdout)");

    auto *predict = add("predict-lep", "Predict logical error probabilities from a prior estimate",
                        synlearn::cli::cmd_predict_lep);
    predict->add_option("--estimate", o.estimate, "Output of the estimate command")->required();
    predict->add_option("--logical", o.logical, "'all' or comma-separated logical indices")->capture_default_str();
    predict->add_option("--max-order", o.max_order, "Subset truncation order")->capture_default_str();
    predict->add_option("--decoder-weight", o.decoder_weight, "Lookup table weight")->capture_default_str();
    predict->add_option("--shots", o.shots, "Also sample the LEP with this many shots (0: skip)");
    predict->add_option("--seed", o.seed, "Seed for the sampled LEP")->capture_default_str();
    predict->add_option("--out", o.out, "Output JSON (default stdout)");

    auto *experiment = add("experiment", "Run an experiment config and write CSV, JSON and SVG",
                           synlearn::cli::cmd_experiment);
    experiment->add_option("--config", o.config, "Experiment config JSON")->required();
    experiment->add_option("--out", o.out, "Output directory")->required();

    auto *plot = add("plot", "Render an experiment CSV as a log-log SVG", synlearn::cli::cmd_plot);
    plot->add_option("--input", o.input, "Experiment CSV")->required();
    plot->add_option("--out", o.out, "Output SVG (default stdout)");

    auto *gen_circuit = add("gen-circuit", "Emit a bundled circuit family as JSON", synlearn::cli::cmd_gen_circuit);
    gen_circuit->add_option("--family", o.family, "repetition, surface or bacon_shor")->required();
    gen_circuit->add_option("--d", o.d, "Distance (grid size for bacon_shor)")->capture_default_str();
    gen_circuit->add_option("--rounds", o.rounds, "Measurement rounds")->capture_default_str();
    gen_circuit->add_option("--out", o.out, "Output JSON (default stdout)");

    auto *gen_faults = add("gen-faults", "Emit the per-location fault template for a circuit",
                           synlearn::cli::cmd_gen_faults);
    gen_faults->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    gen_faults->add_option("--template", o.fault_template, "bitflip or depolarize")->capture_default_str();
    gen_faults->add_option("--p", o.p, "Global physical error rate")->capture_default_str();
    gen_faults->add_option("--out", o.out, "Output JSON (default stdout)");

    auto *sample = add("sample", "Sample syndrome shots", synlearn::cli::cmd_sample);
    sample->add_option("--circuit", o.circuit, "Circuit JSON")->required();
    sample->add_option("--faults", o.faults, "Fault model JSON")->required();
    sample->add_option("--shots", o.shots, "Shot count")->required();
    sample->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sample->add_option("--out", o.out, "Output file (.csv for text, otherwise binary; default CSV to stdout)");

    for (auto *sub : {learn, estimate, sample}) {
        sub->add_option_function<double>(
            "--p",
            [&](double p) {
                o.p = p;
                o.p_given = true;
            },
            "Override the fault file's global rate p");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? synlearn::cli::kExitOk : synlearn::cli::kExitError;
    }
    if (threads > 0) {
        synlearn::parallel::set_thread_count(threads);
    }
    try {
        for (auto &[sub, fn] : handlers) {
            if (sub->parsed()) {
                return fn(o, std::cout);
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return synlearn::cli::kExitError;
    }
    return synlearn::cli::kExitError;
}
