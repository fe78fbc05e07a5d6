// Copyright 2026 The sphgeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPHGEO_TOOLS_CLI_COMMANDS_HPP_
#define SPHGEO_TOOLS_CLI_COMMANDS_HPP_

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/document.hpp"

namespace sphgeo::cli {

struct CommandResult {
  int exit_code = kExitOk;
  std::string message;
  ResultDocument document;  // solve / enumerate
  std::vector<SweepRow> rows;  // sweep
};

// Each command validates the config, computes, and writes cfg.out in
// cfg.format.  Library errors map onto exit codes; nothing throws.
CommandResult cmd_solve(const RunConfig& cfg);
CommandResult cmd_enumerate(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_export_svg(const RunConfig& cfg);

CommandResult run_command(const RunConfig& cfg);

// Alphas from..to inclusive in steps; the last point is kept when it lands
// within a millionth of a step of `to`.
std::vector<double> sweep_grid(double from, double to, double step);

}  // namespace sphgeo::cli

#endif  // SPHGEO_TOOLS_CLI_COMMANDS_HPP_
