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

#ifndef SYNLEARN_TOOLS_COMMANDS_H
#define SYNLEARN_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace synlearn::cli {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnlearnable = 2;

/// Union of every subcommand's flags; each command reads what it needs.
struct Options {
    std::vector<std::string> argv;
    std::string circuit;
    std::string faults;
    std::string estimate;
    std::string config;
    std::string input;
    std::string out;
    std::string logical = "all";
    std::string family;
    std::string fault_template = "depolarize";
    uint64_t shots = 0;
    uint64_t seed = 1;
    size_t q_rows = 0;
    size_t max_order = 4;
    size_t decoder_weight = 4;
    size_t d = 3;
    size_t rounds = 1;
    double p = 1e-3;
    bool p_given = false;
    bool force = false;
    bool clamp = false;
};

int cmd_build_code(const Options &o, std::ostream &out);
int cmd_check_learnability(const Options &o, std::ostream &out);
int cmd_estimate(const Options &o, std::ostream &out);
int cmd_predict_lep(const Options &o, std::ostream &out);
int cmd_experiment(const Options &o, std::ostream &out);
int cmd_plot(const Options &o, std::ostream &out);
int cmd_gen_circuit(const Options &o, std::ostream &out);
int cmd_gen_faults(const Options &o, std::ostream &out);
int cmd_sample(const Options &o, std::ostream &out);

/// Writes the run manifest for a command that emits to o.out. Directory
/// outputs get out/manifest.json, file outputs get <out>.manifest.json.
/// Returns the manifest path.
std::string write_manifest(
    const Options &o, const std::string &command, const std::vector<std::string> &inputs,
    const std::vector<std::string> &outputs, bool out_is_dir);

}  // namespace synlearn::cli

#endif
