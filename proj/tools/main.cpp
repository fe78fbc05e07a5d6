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

// sphgeo {solve|enumerate|sweep|export} ...
//
// Exit codes: 0 ok, 2 config/domain error, 3 not realizable, 4 validation
// failure.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using sphgeo::cli::RunConfig;

struct RawOptions {
  std::string solid;
  std::string alpha;
  std::string type;
  std::string edges;
  std::optional<int> depth;
  double tol_closure = 1e-9;
  double tol_vertex = 1e-9;
  std::string out;
  std::string format;
  std::string from;
  std::string to;
  std::string step;
  std::string in;
  int class_index = 0;
};

void add_common(CLI::App* cmd, RawOptions& o, bool needs_solid) {
  auto* solid = cmd->add_option("--solid", o.solid, "tetra | octa | cube");
  if (needs_solid) solid->required();
  cmd->add_option("--tol-closure", o.tol_closure, "closure tolerance")->capture_default_str();
  cmd->add_option("--tol-vertex", o.tol_vertex, "vertex avoidance tolerance (edge fraction)")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output path")->required();
  cmd->add_option("--format", o.format, "json | csv | svg");
  cmd->add_option("--class", o.class_index, "class index drawn by svg output");
}

RunConfig to_config(const std::string& command, const RawOptions& o) {
  using namespace sphgeo::cli;
  RunConfig cfg;
  cfg.command = command;
  if (!o.solid.empty()) cfg.solid = sphgeo::parse_solid_kind(o.solid);
  if (!o.alpha.empty()) cfg.alpha = parse_alpha(o.alpha);
  if (!o.type.empty()) {
    if (cfg.solid == sphgeo::SolidKind::Tetrahedron) {
      cfg.type = parse_type_pair(o.type);
    } else {
      const auto k = parse_int_list(o.type);
      if (k.size() != 1) throw ConfigError("--type for octa/cube is a construction number");
      cfg.construction = k.front();
    }
  }
  if (!o.edges.empty()) cfg.edges = parse_int_list(o.edges);
  cfg.max_crossings = o.depth;
  cfg.tol.closure = o.tol_closure;
  cfg.tol.vertex = o.tol_vertex;
  cfg.out = o.out;
  const std::string fallback = command == "sweep" ? "csv" : command == "export" ? "svg" : "json";
  cfg.format = parse_format(o.format.empty() ? fallback : o.format);
  if (!o.from.empty()) cfg.alpha_from = parse_alpha(o.from);
  if (!o.to.empty()) cfg.alpha_to = parse_alpha(o.to);
  if (!o.step.empty()) cfg.alpha_step = parse_alpha(o.step);
  cfg.in = o.in;
  cfg.class_index = o.class_index;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple closed geodesics on regular spherical polyhedra"};
  app.require_subcommand(1);
  RawOptions o;

  auto* solve = app.add_subcommand("solve", "solve one type or crossing sequence");
  add_common(solve, o, true);
  solve->add_option("--alpha", o.alpha, "planar angle: radians or Xpi")->required();
  solve->add_option("--type", o.type, "tetra: p,q; octa/cube: construction number");
  solve->add_option("--edges", o.edges, "explicit cyclic edge-id sequence");

  auto* enumerate = app.add_subcommand("enumerate", "all simple closed geodesic classes");
  add_common(enumerate, o, true);
  enumerate->add_option("--alpha", o.alpha, "planar angle: radians or Xpi")->required();
  enumerate->add_option("--depth", o.depth, "maximum number of crossings (default 12)");

  auto* sweep = app.add_subcommand("sweep", "tetra counts over an alpha range");
  add_common(sweep, o, true);
  sweep->add_option("--from", o.from, "first alpha")->required();
  sweep->add_option("--to", o.to, "last alpha (inclusive)")->required();
  sweep->add_option("--step", o.step, "alpha step")->required();
  sweep->add_option("--depth", o.depth, "skip types needing more crossings");

  auto* exporter = app.add_subcommand("export", "draw a class of a result document as SVG");
  add_common(exporter, o, false);
  exporter->add_option("--in", o.in, "result document (json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sphgeo::cli::kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  RunConfig cfg;
  try {
    cfg = to_config(command, o);
  } catch (const std::exception& e) {
    std::cerr << "sphgeo: " << e.what() << "\n";
    return sphgeo::cli::kExitConfig;
  }
  const auto result = sphgeo::cli::run_command(cfg);
  if (!result.message.empty()) std::cerr << "sphgeo: " << result.message << "\n";
  return result.exit_code;
}
