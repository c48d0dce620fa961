// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "imsteer/error.hpp"

namespace {

using imsteer::cli::RunConfig;
using Command = std::function<int(const RunConfig &, std::ostream &)>;

void add_state_options(CLI::App *cmd, RunConfig &config) {
    cmd->add_option("--state", config.state,
                    "werner, mems, singlet, maximally_mixed or a JSON file")
        ->capture_default_str();
    cmd->add_option("--v", config.v, "Werner visibility")
        ->capture_default_str();
    cmd->add_option("--c", config.c, "MEMS concurrence")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    using namespace imsteer::cli;

    RunConfig config;
    std::string format;
    std::string out_path;

    CLI::App app{"Imaginarity steering toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");

    std::map<CLI::App *, Command> commands;

    auto *eval = app.add_subcommand("eval", "all criteria for one state");
    add_state_options(eval, config);
    eval->add_option("--lambda", config.lambda, "sharpness of Alice's measurements")
        ->capture_default_str();
    eval->add_flag("--optimize", config.optimize,
                   "optimise the NAQI measurement triads");
    commands[eval] = cmd_eval;

    auto *region = app.add_subcommand("region", "ISI over the X-state (beta_xx, beta_yy) plane");
    region->add_option("--resolution", config.resolution, "grid points per axis")
        ->capture_default_str();
    commands[region] = cmd_region;

    auto *thresholds = app.add_subcommand(
        "thresholds", "critical Werner visibility and unsharp sharpness");
    thresholds->add_option("--criterion", config.criterion,
                           "all, isi, cffw, naqc_l1, naqc_rel_entropy, "
                           "naqc_skew, naqi_l1 or naqi_rel_entropy")
        ->capture_default_str();
    thresholds->add_option("--tol", config.tolerance, "bisection tolerance")
        ->capture_default_str();
    commands[thresholds] = cmd_thresholds;

    auto *monogamy = app.add_subcommand("monogamy", "Monte Carlo scan of I2(AB) + I2(AC)");
    monogamy->add_option("--samples", config.samples)->capture_default_str();
    monogamy->add_option("--seed", config.seed)->capture_default_str();
    monogamy->add_flag("--include-maximizer", config.include_maximizer,
                       "score the known maximizer as an extra point");
    commands[monogamy] = cmd_monogamy;

    auto *witness = app.add_subcommand("witness", "optimal witness and its local decomposition");
    add_state_options(witness, config);
    commands[witness] = cmd_witness;

    auto *audit = app.add_subcommand("audit", "randomised invariant suites");
    audit->add_option("--suite", config.suite,
                      "all, separable, convexity, duality, complementarity or "
                      "closed_form")
        ->capture_default_str();
    audit->add_option("--n", config.n, "samples per suite")->capture_default_str();
    audit->add_option("--seed", config.seed)->capture_default_str();
    commands[audit] = cmd_audit;

    // Global options are also accepted after the subcommand.
    for (auto &[cmd, _] : commands) {
        cmd->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (!format.empty()) {
            config.format = parse_format(format);
        }
        const Command &run =
            std::find_if(commands.begin(), commands.end(), [](const auto &entry) {
                return entry.first->parsed();
            })->second;
        std::ostringstream report;
        const int code = run(config, report);
        if (out_path.empty()) {
            std::cout << report.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!(file << report.str())) {
                throw imsteer::Error("cannot write '" + out_path + "'");
            }
        }
        return code;
    } catch (const imsteer::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const imsteer::InternalError &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
}
