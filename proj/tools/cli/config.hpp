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

#ifndef SPHGEO_TOOLS_CLI_CONFIG_HPP_
#define SPHGEO_TOOLS_CLI_CONFIG_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sphgeo/finder.hpp"
#include "sphgeo/solids.hpp"

namespace sphgeo::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNotRealizable = 3,
  kExitValidation = 4,
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { kJson, kCsv, kSvg };

OutputFormat parse_format(std::string_view s);
std::string_view to_string(OutputFormat f);

// Decimal radians ("1.2566") or a multiple of pi ("0.4pi", "pi", "2pi/3").
double parse_alpha(std::string_view s);
// "p,q" (also "p:q").
GeodesicType parse_type_pair(std::string_view s);
// Comma separated non-negative integers.
std::vector<int> parse_int_list(std::string_view s);

struct RunConfig {
  std::string command;
  SolidKind solid = SolidKind::Tetrahedron;
  double alpha = 0.0;
  // solve: tetra (p,q) as given; octa/cube use `construction` instead.
  std::optional<GeodesicType> type;
  std::optional<int> construction;
  std::optional<std::vector<int>> edges;
  // enumerate defaults to 12; sweep defaults to whatever each candidate needs.
  std::optional<int> max_crossings;
  Tolerances tol;
  std::string out;
  OutputFormat format = OutputFormat::kJson;
  // sweep
  double alpha_from = 0.0;
  double alpha_to = 0.0;
  double alpha_step = 0.0;
  // export / svg
  std::string in;
  int class_index = 0;

  // Throws ConfigError on a violated invariant.
  void validate() const;
};

}  // namespace sphgeo::cli

#endif  // SPHGEO_TOOLS_CLI_CONFIG_HPP_
