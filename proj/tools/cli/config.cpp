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

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace sphgeo::cli {

namespace {

double parse_double(const std::string& s, std::string_view what) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "svg") return OutputFormat::kSvg;
  throw ConfigError("unknown format '" + std::string(s) + "'");
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kSvg: return "svg";
  }
  return "json";
}

double parse_alpha(std::string_view text) {
  const std::string s(text);
  static const std::regex kPiForm(R"(^\s*([0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\*?pi(?:/([0-9]*\.?[0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, kPiForm)) {
    const double coef = m[1].length() > 0 ? parse_double(m[1].str(), "alpha") : 1.0;
    const double den = m[2].matched ? parse_double(m[2].str(), "alpha") : 1.0;
    if (!(den > 0.0)) throw ConfigError("alpha denominator must be positive");
    return coef * kPi / den;
  }
  return parse_double(s, "alpha");
}

GeodesicType parse_type_pair(std::string_view s) {
  const size_t sep = s.find_first_of(",:");
  if (sep == std::string_view::npos) throw ConfigError("type must look like p,q");
  const int p = parse_int(s.substr(0, sep), "type");
  const int q = parse_int(s.substr(sep + 1), "type");
  try {
    return make_type(p, q);
  } catch (const ClassificationError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t end = std::min(s.find(',', start), s.size());
    const int v = parse_int(s.substr(start, end - start), "integer list");
    if (v < 0) throw ConfigError("negative entry in integer list");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

void RunConfig::validate() const {
  if (!(tol.closure > 0.0) || !(tol.vertex > 0.0) || !(tol.simplicity > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (max_crossings && *max_crossings < 3) throw ConfigError("depth must be at least 3");
  auto check_alpha = [&](double a) {
    const AngleInterval iv = admissible_interval(solid);
    if (!iv.contains(a)) {
      throw ConfigError("alpha " + std::to_string(a) + " outside the admissible interval of the " +
                        std::string(sphgeo::to_string(solid)));
    }
  };
  if (command == "solve" || command == "enumerate") check_alpha(alpha);
  if (command == "sweep") {
    if (!(alpha_step > 0.0) || !(alpha_to >= alpha_from)) throw ConfigError("empty alpha range");
    check_alpha(alpha_from);
    check_alpha(alpha_to);
  }
  if (command == "solve" && !edges) {
    if (solid == SolidKind::Tetrahedron && !type) throw ConfigError("solve on tetra needs --type p,q");
    if (solid != SolidKind::Tetrahedron) {
      const int types = solid == SolidKind::Octahedron ? 2 : 3;
      if (!construction || *construction < 1 || *construction > types) {
        throw ConfigError("solve on " + std::string(sphgeo::to_string(solid)) +
                          " needs --type k with 1 <= k <= " + std::to_string(types));
      }
    }
  }
  if (command == "export" && in.empty()) throw ConfigError("export needs --in <document.json>");
  if (class_index < 0) throw ConfigError("class index must be non-negative");
  if (out.empty()) throw ConfigError("--out is required");
}

}  // namespace sphgeo::cli
