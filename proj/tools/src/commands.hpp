// Copyright 2026 The rykick Authors
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


#ifndef RYKICK_TOOLS_COMMANDS_HPP
#define RYKICK_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <string>

#include "config.hpp"
#include "output.hpp"

namespace rykick::cli {

/// Outcome of a subcommand: a deterministic summary for stdout and an exit
/// status (0 ok, 4 infeasible).
struct CommandResult {
  Json summary;
  int status = 0;
};

CommandResult run_modes(const RunConfig& config);
CommandResult run_four_kick(const RunConfig& config, const std::string& prefix = "four_kick");
CommandResult run_optimize(const RunConfig& config, const std::string& prefix = "optimize");
CommandResult run_simulate(const RunConfig& config, const std::filesystem::path& waveform_path);
CommandResult run_scan_pairs(const RunConfig& config);
CommandResult run_feasibility(const RunConfig& config);
CommandResult run_scaling(const RunConfig& config);

/// Targets: table1, fig2, fig3, fig4.
CommandResult run_reproduce(const RunConfig& config, const std::string& target);

}  // namespace rykick::cli

#endif  // RYKICK_TOOLS_COMMANDS_HPP
