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

#ifndef RACKRS_COMMANDS_HPP
#define RACKRS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

#include "rackrs/predict.hpp"
#include "rackrs/rack_code.hpp"
#include "rackrs/repair.hpp"
#include "rackrs/scenario.hpp"
#include "rackrs/simulator.hpp"

namespace rackrs {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 2, kExitConfig = 3 };

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> ledger;
    std::optional<std::filesystem::path> csv;
    bool show_intra = false;
};

/// Everything produced by one build -> inject -> plan -> run -> verify pass.
struct ScenarioRun {
    RackCode code;
    Poly message;
    RackArray original;
    RepairPlan plan;
    RunResult result{};
    SymbolMatrix restored{};
    Formula formula = Formula::Cor1;
    Rational formula_value{};
    bool restored_ok = false;
    bool oracle_ok = false;
    bool bandwidth_ok = false;

    bool ok() const noexcept { return restored_ok && oracle_ok && bandwidth_ok; }
};

ScenarioRun execute_scenario(const Scenario& scn, std::uint64_t seed);
ScenarioRun execute_scenario(const RackCode& code, const Poly& message, const FailureSpec& failures,
                             const std::optional<std::vector<std::size_t>>& helpers, const SchemeConfig& scheme);

void write_report(std::ostream& out, const ScenarioRun& run, bool show_intra);

/// The shipped Example 1 scenario text.
std::string_view example1_scenario();

int cmd_run(const Scenario& scn, const RunOptions& opts, std::ostream& out);
int cmd_example1(const RunOptions& opts, std::ostream& out);
/// Reads sweep lines from `sweep`, or uses the built-in sweep when null.
int cmd_table(std::istream* sweep, const RunOptions& opts, std::ostream& out);
int cmd_verify(const Scenario& scn, std::size_t trials, const RunOptions& opts, std::ostream& out);

}  // namespace rackrs

#endif  // RACKRS_COMMANDS_HPP
