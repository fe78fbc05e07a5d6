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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cli/svg.hpp"
#include "sphgeo/counts.hpp"
#include "sphgeo/solids.hpp"

namespace sphgeo::cli {

namespace {

CommandResult fail(int code, std::string message) {
  CommandResult r;
  r.exit_code = code;
  r.message = std::move(message);
  return r;
}

ResultDocument base_document(const RunConfig& cfg, int max_crossings) {
  ResultDocument doc;
  doc.command = cfg.command;
  doc.solid = std::string(sphgeo::to_string(cfg.solid));
  doc.alpha = cfg.alpha;
  doc.max_crossings = max_crossings;
  doc.tol_closure = cfg.tol.closure;
  doc.tol_vertex = cfg.tol.vertex;
  return doc;
}

// Writes the document, or the chosen class as SVG.
void emit(const RunConfig& cfg, const SolidSpec& spec, CommandResult& r,
          const std::vector<GeodesicClass>& classes) {
  switch (cfg.format) {
    case OutputFormat::kJson:
      write_text(cfg.out, to_json(r.document));
      return;
    case OutputFormat::kSvg:
      if (classes.empty()) throw ConfigError("no class to draw");
      if (static_cast<size_t>(cfg.class_index) >= classes.size()) {
        throw ConfigError("class index out of range");
      }
      write_text(cfg.out, render_svg(spec, classes[cfg.class_index].representative));
      return;
    case OutputFormat::kCsv:
      throw ConfigError("csv output is only available for sweep");
  }
}

// Runs body, mapping library exceptions to exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    return fail(kExitConfig, e.what());
  } catch (const DomainError& e) {
    return fail(kExitConfig, e.what());
  } catch (const InvalidSequence& e) {
    return fail(kExitConfig, e.what());
  } catch (const ClassificationError& e) {
    return fail(kExitConfig, e.what());
  }
}

CrossingSequence construction_sequence(const SolidSpec& spec, int k) {
  if (spec.kind() == SolidKind::Octahedron) {
    return k == 1 ? octa_type1_sequence(spec) : octa_type2_sequence(spec);
  }
  switch (k) {
    case 1: return cube_type1_sequence(spec);
    case 2: return cube_type2_sequence(spec);
    default: return cube_type3_sequence(spec);
  }
}

}  // namespace

std::vector<double> sweep_grid(double from, double to, double step) {
  std::vector<double> out;
  if (!(step > 0.0) || !(to >= from)) return out;
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-6));
  for (long k = 0; k <= count; ++k) {
    out.push_back(std::min(to, from + static_cast<double>(k) * step));
  }
  return out;
}

CommandResult cmd_solve(const RunConfig& cfg) {
  return guarded([&] {
    cfg.validate();
    const SolidSpec spec = build_solid(cfg.solid, PlanarAngle(cfg.alpha));
    const Tolerances tol = cfg.tol;
    CommandResult r;
    std::vector<GeodesicClass> classes;

    if (cfg.edges) {
      const CrossingSequence seq = CrossingSequence::from_edges(spec, *cfg.edges);
      r.document = base_document(cfg, static_cast<int>(seq.size()));
      if (auto cls = solve_class(spec, seq, tol)) classes.push_back(std::move(*cls));
    } else if (cfg.solid == SolidKind::Tetrahedron) {
      const GeodesicType t = *cfg.type;
      r.document = base_document(cfg, t.crossings());
      TypeVerdict v;
      v.type = t;
      v.s = quadratic_form(t.p, t.q);
      v.necessary_excluded = necessary_excluded(t.p, t.q, cfg.alpha);
      v.sufficient = sufficient_exists(t.p, t.q, cfg.alpha);
      if (v.necessary_excluded) {
        v.verdict = Verdict::kNecessaryExcluded;
      } else {
        SearchOptions opts;
        opts.max_crossings = t.crossings();
        opts.tol = tol;
        auto cls = find_tetra_type(spec, t, opts);
        v.found = cls.has_value();
        if (cls) {
          v.verdict = v.sufficient ? Verdict::kSufficientGuaranteed : Verdict::kSolverFound;
          classes.push_back(std::move(*cls));
        } else {
          v.verdict = Verdict::kSolverNotFound;
        }
      }
      // Bounds for the requested type only: N counts the listed verdicts found.
      CountReport report;
      report.alpha = cfg.alpha;
      report.f = f_alpha(cfg.alpha);
      report.g = g_alpha(cfg.alpha);
      report.c1 = c1_alpha(cfg.alpha);
      report.c2 = c2_alpha(cfg.alpha);
      report.psi1 = psi_count(report.f, PsiPredicate::kForm);
      report.psi2 = psi_count(report.g, PsiPredicate::kForm);
      report.verdicts.push_back(v);
      report.N = static_cast<int>(classes.size());
      r.document.bounds = make_bounds_record(report);
    } else {
      const CrossingSequence seq = construction_sequence(spec, *cfg.construction);
      r.document = base_document(cfg, static_cast<int>(seq.size()));
      if (auto cls = solve_class(spec, seq, tol)) classes.push_back(std::move(*cls));
    }

    for (const auto& c : classes) r.document.classes.push_back(make_class_record(c));
    if (classes.empty()) {
      if (cfg.format == OutputFormat::kJson) write_text(cfg.out, to_json(r.document));
      r.exit_code = kExitNotRealizable;
      r.message = "no simple closed geodesic of the requested kind at this alpha";
      return r;
    }
    emit(cfg, spec, r, classes);
    return r;
  });
}

CommandResult cmd_enumerate(const RunConfig& cfg) {
  return guarded([&] {
    cfg.validate();
    const SolidSpec spec = build_solid(cfg.solid, PlanarAngle(cfg.alpha));
    SearchOptions opts;
    opts.max_crossings = cfg.max_crossings.value_or(12);
    opts.tol = cfg.tol;
    const auto classes = enumerate_classes(spec, opts);
    CommandResult r;
    r.document = base_document(cfg, opts.max_crossings);
    for (const auto& c : classes) r.document.classes.push_back(make_class_record(c));
    emit(cfg, spec, r, classes);
    return r;
  });
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  return guarded([&] {
    cfg.validate();
    if (cfg.solid != SolidKind::Tetrahedron) throw ConfigError("sweep is defined for tetra only");
    if (cfg.format != OutputFormat::kCsv) throw ConfigError("sweep writes csv");
    const auto grid = sweep_grid(cfg.alpha_from, cfg.alpha_to, cfg.alpha_step);
    if (grid.empty()) throw ConfigError("empty alpha range");
    CountOptions opts;
    if (cfg.max_crossings) opts.max_crossings = *cfg.max_crossings;
    opts.tol = cfg.tol;
    CommandResult r;
    for (double a : grid) r.rows.push_back(make_sweep_row(count_tetra(a, opts)));
    write_text(cfg.out, sweep_csv(r.rows));
    return r;
  });
}

CommandResult cmd_export_svg(const RunConfig& cfg) {
  return guarded([&] {
    cfg.validate();
    if (cfg.format != OutputFormat::kSvg) throw ConfigError("export writes svg");
    const ResultDocument doc = from_json(read_text(cfg.in));
    if (doc.classes.empty()) throw ConfigError("document has no classes");
    if (static_cast<size_t>(cfg.class_index) >= doc.classes.size()) {
      throw ConfigError("class index out of range");
    }
    const SolidSpec spec = build_solid(parse_solid_kind(doc.solid), PlanarAngle(doc.alpha));
    const ClassRecord& rec = doc.classes[cfg.class_index];
    const Tolerances tol = cfg.tol;

    if (!(rec.closure_residual < tol.closure)) {
      return fail(kExitValidation, "recorded closure residual exceeds the tolerance");
    }
    std::optional<GeodesicPath> path;
    try {
      path = solve_sequence(spec, CrossingSequence::from_edges(spec, rec.canonical_sequence), tol);
    } catch (const InvalidSequence& e) {
      return fail(kExitValidation, std::string("recorded sequence is invalid: ") + e.what());
    }
    if (!path) return fail(kExitValidation, "recorded sequence is not a simple closed geodesic");
    if (path->crossings.size() != rec.crossings.size() ||
        std::abs(path->total_length - rec.total_length) > tol.closure) {
      return fail(kExitValidation, "recorded geodesic does not match the re-solved one");
    }
    CommandResult r;
    r.document = doc;
    write_text(cfg.out, render_svg(spec, *path));
    return r;
  });
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "solve") return cmd_solve(cfg);
  if (cfg.command == "enumerate") return cmd_enumerate(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  if (cfg.command == "export") return cmd_export_svg(cfg);
  return fail(kExitConfig, "unknown command '" + cfg.command + "'");
}

}  // namespace sphgeo::cli
