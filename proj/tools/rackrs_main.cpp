/*
   Copyright 2026 The rackrs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rackrs/commands.hpp"
#include "rackrs/error.hpp"
#include "rackrs/scenario.hpp"

int main(int argc, char** argv) {
    using namespace rackrs;
    CLI::App app{"rackrs: rack-aware Reed-Solomon repair simulator"};
    app.require_subcommand(1);

    RunOptions opts;
    std::uint64_t seed = 0;
    std::string ledger;
    std::string csv;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Override the scenario seed");
        cmd->add_option("--ledger", ledger, "Write the message ledger to this file");
        cmd->add_option("--csv", csv, "Write CSV output to this file");
        cmd->add_flag("--show-intra", opts.show_intra, "Include intra-rack messages in ledger output");
    };

    std::string scenario_path;
    auto* run = app.add_subcommand("run", "Build, fail, repair and verify one scenario");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    add_common(run);

    auto* example1 = app.add_subcommand("example1", "Reproduce the GF(16) worked example");
    add_common(example1);

    std::string sweep_path;
    auto* table = app.add_subcommand("table", "Evaluate bandwidth formulas over parameter sweeps");
    table->add_option("sweep", sweep_path, "Sweep file (built-in sweep when omitted)");
    add_common(table);

    std::size_t trials = 100;
    auto* verify = app.add_subcommand("verify", "Randomized property campaign for a scenario");
    verify->add_option("scenario", scenario_path, "Scenario file")->required();
    verify->add_option("--trials", trials, "Number of random messages");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    for (auto* cmd : {run, example1, table, verify})
        if (cmd->parsed() && cmd->count("--seed")) opts.seed = seed;
    if (!ledger.empty()) opts.ledger = ledger;
    if (!csv.empty()) opts.csv = csv;

    try {
        if (run->parsed()) return cmd_run(load_scenario(scenario_path), opts, std::cout);
        if (example1->parsed()) return cmd_example1(opts, std::cout);
        if (verify->parsed()) return cmd_verify(load_scenario(scenario_path), trials, opts, std::cout);
        if (sweep_path.empty()) return cmd_table(nullptr, opts, std::cout);
        std::ifstream in(sweep_path);
        if (!in) throw Error(ErrorCode::ConfigError, "cannot open sweep file '" + sweep_path + "'");
        return cmd_table(&in, opts, std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
