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

#ifndef SPHGEO_TOOLS_CLI_DOCUMENT_HPP_
#define SPHGEO_TOOLS_CLI_DOCUMENT_HPP_

// Result documents (JSON, schema version "1") and sweep tables (CSV).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphgeo/counts.hpp"
#include "sphgeo/finder.hpp"

namespace sphgeo::cli {

inline constexpr const char* kSchemaVersion = "1";

struct CrossingRecord {
  int edge = 0;
  double t = 0.0;
  double incidence_angle = 0.0;
  bool operator==(const CrossingRecord&) const = default;
};

struct ClassRecord {
  std::vector<int> canonical_sequence;  // edge ids
  std::string kind_tag;
  double total_length = 0.0;
  double closure_residual = 0.0;
  std::array<double, 3> pole{};
  std::vector<CrossingRecord> crossings;
  int orbit_size = 0;
  bool operator==(const ClassRecord&) const = default;
};

struct VerdictRecord {
  int p = 0;
  int q = 1;
  long long s = 1;
  bool necessary_excluded = false;
  bool sufficient = false;
  std::optional<bool> found;
  std::string verdict;
  bool operator==(const VerdictRecord&) const = default;
};

struct BoundsRecord {
  double c1 = 0.0;
  double c2 = 0.0;
  double f = 0.0;
  double g = 0.0;
  int N = 0;
  long long psi1 = 0;
  long long psi2 = 0;
  std::vector<VerdictRecord> verdicts;
  bool operator==(const BoundsRecord&) const = default;
};

struct ResultDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::string solid;
  double alpha = 0.0;
  int max_crossings = 0;
  double tol_closure = 0.0;
  double tol_vertex = 0.0;
  std::vector<ClassRecord> classes;
  std::optional<BoundsRecord> bounds;
  bool operator==(const ResultDocument&) const = default;
};

ClassRecord make_class_record(const GeodesicClass& cls);
BoundsRecord make_bounds_record(const CountReport& report);

std::string to_json(const ResultDocument& doc);
// Throws ConfigError on malformed input.
ResultDocument from_json(const std::string& text);

struct SweepRow {
  double alpha = 0.0;
  int N = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<GeodesicType> found;
  std::vector<GeodesicType> excluded;
  bool envelope = false;  // c1 < N < c2
};

SweepRow make_sweep_row(const CountReport& report);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Whole-file helpers; throw ConfigError on I/O failure.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace sphgeo::cli

#endif  // SPHGEO_TOOLS_CLI_DOCUMENT_HPP_
