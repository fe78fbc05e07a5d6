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

#include "cli/document.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli/config.hpp"

namespace sphgeo::cli {

using Json = nlohmann::ordered_json;

ClassRecord make_class_record(const GeodesicClass& cls) {
  const GeodesicPath& path = cls.representative;
  ClassRecord r;
  r.canonical_sequence = cls.canonical.edges();
  r.kind_tag = tag_label(cls.tag);
  r.total_length = path.total_length;
  r.closure_residual = path.closure_residual;
  r.pole = {path.pole.x(), path.pole.y(), path.pole.z()};
  for (const PathCrossing& c : path.crossings) r.crossings.push_back({c.edge, c.t, c.incidence});
  r.orbit_size = cls.orbit_size;
  return r;
}

BoundsRecord make_bounds_record(const CountReport& report) {
  BoundsRecord b;
  b.c1 = report.c1;
  b.c2 = report.c2;
  b.f = report.f;
  b.g = report.g;
  b.N = report.N;
  b.psi1 = report.psi1;
  b.psi2 = report.psi2;
  for (const TypeVerdict& v : report.verdicts) {
    b.verdicts.push_back({v.type.p, v.type.q, static_cast<long long>(v.s), v.necessary_excluded,
                          v.sufficient, v.found, to_string(v.verdict)});
  }
  return b;
}

std::string to_json(const ResultDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["solid"] = doc.solid;
  j["alpha"] = doc.alpha;
  j["max_crossings"] = doc.max_crossings;
  j["tolerances"] = {{"closure", doc.tol_closure}, {"vertex", doc.tol_vertex}};
  Json classes = Json::array();
  for (const ClassRecord& c : doc.classes) {
    Json cj;
    cj["canonical_sequence"] = c.canonical_sequence;
    cj["kind_tag"] = c.kind_tag;
    cj["total_length"] = c.total_length;
    cj["closure_residual"] = c.closure_residual;
    cj["pole"] = c.pole;
    Json xs = Json::array();
    for (const CrossingRecord& x : c.crossings) {
      xs.push_back({{"edge", x.edge}, {"t", x.t}, {"incidence_angle", x.incidence_angle}});
    }
    cj["crossings"] = std::move(xs);
    cj["orbit_size"] = c.orbit_size;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  if (doc.bounds) {
    const BoundsRecord& b = *doc.bounds;
    Json bj;
    bj["c1"] = b.c1;
    bj["c2"] = b.c2;
    bj["f"] = b.f;
    bj["g"] = b.g;
    bj["N"] = b.N;
    bj["psi1"] = b.psi1;
    bj["psi2"] = b.psi2;
    Json vs = Json::array();
    for (const VerdictRecord& v : b.verdicts) {
      Json vj;
      vj["p"] = v.p;
      vj["q"] = v.q;
      vj["s"] = v.s;
      vj["necessary_excluded"] = v.necessary_excluded;
      vj["sufficient"] = v.sufficient;
      vj["found"] = v.found ? Json(*v.found) : Json(nullptr);
      vj["verdict"] = v.verdict;
      vs.push_back(std::move(vj));
    }
    bj["verdicts"] = std::move(vs);
    j["bounds"] = std::move(bj);
  }
  return j.dump(2) + "\n";
}

ResultDocument from_json(const std::string& text) {
  ResultDocument doc;
  try {
    const Json j = Json::parse(text);
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      throw ConfigError("unsupported schema_version '" + doc.schema_version + "'");
    }
    doc.command = j.at("command").get<std::string>();
    doc.solid = j.at("solid").get<std::string>();
    doc.alpha = j.at("alpha").get<double>();
    doc.max_crossings = j.at("max_crossings").get<int>();
    doc.tol_closure = j.at("tolerances").at("closure").get<double>();
    doc.tol_vertex = j.at("tolerances").at("vertex").get<double>();
    for (const Json& cj : j.at("classes")) {
      ClassRecord c;
      c.canonical_sequence = cj.at("canonical_sequence").get<std::vector<int>>();
      c.kind_tag = cj.at("kind_tag").get<std::string>();
      c.total_length = cj.at("total_length").get<double>();
      c.closure_residual = cj.at("closure_residual").get<double>();
      c.pole = cj.at("pole").get<std::array<double, 3>>();
      for (const Json& xj : cj.at("crossings")) {
        c.crossings.push_back({xj.at("edge").get<int>(), xj.at("t").get<double>(),
                               xj.at("incidence_angle").get<double>()});
      }
      c.orbit_size = cj.at("orbit_size").get<int>();
      doc.classes.push_back(std::move(c));
    }
    if (j.contains("bounds")) {
      const Json& bj = j.at("bounds");
      BoundsRecord b;
      b.c1 = bj.at("c1").get<double>();
      b.c2 = bj.at("c2").get<double>();
      b.f = bj.at("f").get<double>();
      b.g = bj.at("g").get<double>();
      b.N = bj.at("N").get<int>();
      b.psi1 = bj.at("psi1").get<long long>();
      b.psi2 = bj.at("psi2").get<long long>();
      for (const Json& vj : bj.at("verdicts")) {
        VerdictRecord v;
        v.p = vj.at("p").get<int>();
        v.q = vj.at("q").get<int>();
        v.s = vj.at("s").get<long long>();
        v.necessary_excluded = vj.at("necessary_excluded").get<bool>();
        v.sufficient = vj.at("sufficient").get<bool>();
        if (!vj.at("found").is_null()) v.found = vj.at("found").get<bool>();
        v.verdict = vj.at("verdict").get<std::string>();
        b.verdicts.push_back(std::move(v));
      }
      doc.bounds = std::move(b);
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed result document: ") + e.what());
  }
  return doc;
}

SweepRow make_sweep_row(const CountReport& report) {
  SweepRow row;
  row.alpha = report.alpha;
  row.N = report.N;
  row.c1 = report.c1;
  row.c2 = report.c2;
  row.found = report.realizable;
  for (const TypeVerdict& v : report.verdicts) {
    if (v.found && !*v.found) row.excluded.push_back(v.type);
  }
  row.envelope = report.c1 < report.N && report.N < report.c2;
  return row;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_types(const std::vector<GeodesicType>& types) {
  std::string out;
  for (size_t i = 0; i < types.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(types[i].p) + ":" + std::to_string(types[i].q);
  }
  return out;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "alpha_radians,N,c1,c2,types_found,types_excluded,envelope\n";
  for (const SweepRow& r : rows) {
    os << format_double(r.alpha) << ',' << r.N << ',' << format_double(r.c1) << ','
       << format_double(r.c2) << ',' << join_types(r.found) << ',' << join_types(r.excluded)
       << ',' << (r.envelope ? 1 : 0) << '\n';
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw ConfigError("failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace sphgeo::cli
