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

#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "sphgeo/unfold.hpp"

namespace sphgeo::cli {

namespace {

constexpr int kSamplesPerEdge = 24;

struct Point2 {
  double x;
  double y;
};

class Projection {
 public:
  explicit Projection(const Vec3& pole) : frame_(pole) {}

  Point2 operator()(const Vec3& v) const {
    const double r = std::acos(std::clamp(v.dot(frame_.pole), -1.0, 1.0));
    const double phi = frame_.azimuth(v);
    return {r * std::cos(phi), -r * std::sin(phi)};
  }

  Vec3 on_equator(double phi) const { return std::cos(phi) * frame_.e1 + std::sin(phi) * frame_.e2; }

 private:
  PoleFrame frame_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const SolidSpec& spec, const GeodesicPath& path, double size_px) {
  const Development dev = develop(spec, path.seq);
  const Projection proj(path.pole.vec());
  const auto& chart = spec.chart();
  const int sides = spec.sides();
  const size_t n = path.seq.size();

  std::vector<std::vector<Point2>> outlines;
  for (size_t i = 0; i < n; ++i) {
    const Rotation3& placement = dev.placements[i + 1];
    std::vector<Point2> pts;
    for (int k = 0; k < sides; ++k) {
      const GreatArc edge(placement * chart[k], placement * chart[(k + 1) % sides]);
      for (int s = 0; s < kSamplesPerEdge; ++s) {
        pts.push_back(proj(edge.point_at(static_cast<double>(s) / kSamplesPerEdge)));
      }
    }
    outlines.push_back(std::move(pts));
  }

  std::vector<Point2> geodesic;
  const double phi0 = path.crossings.front().azimuth;
  const int steps = std::max(8, static_cast<int>(std::ceil(path.total_length * 64.0)));
  for (int s = 0; s <= steps; ++s) {
    geodesic.push_back(proj(proj.on_equator(phi0 + path.total_length * s / steps)));
  }
  std::vector<Point2> marks;
  for (const PathCrossing& c : path.crossings) marks.push_back(proj(c.point));

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto grow = [&](const Point2& p) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& o : outlines) std::for_each(o.begin(), o.end(), grow);
  std::for_each(geodesic.begin(), geodesic.end(), grow);
  const double margin = 16.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (size_px - 2.0 * margin) / span;
  auto sx = [&](const Point2& p) { return fmt(margin + (p.x - lo_x) * scale); };
  auto sy = [&](const Point2& p) { return fmt(margin + (p.y - lo_y) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size_px)
     << "\" height=\"" << fmt(size_px) << "\" viewBox=\"0 0 " << fmt(size_px) << ' '
     << fmt(size_px) << "\">\n"
     << "  <title>" << sphgeo::to_string(spec.kind()) << " alpha=" << spec.alpha().radians()
     << " crossings=" << n << "</title>\n";
  for (size_t i = 0; i < outlines.size(); ++i) {
    os << "  <g class=\"face\" data-face=\"" << path.seq[i].to_face << "\">\n    <path d=\"";
    for (size_t k = 0; k < outlines[i].size(); ++k) {
      os << (k == 0 ? "M" : " L") << sx(outlines[i][k]) << ',' << sy(outlines[i][k]);
    }
    os << " Z\" fill=\"#eef2f7\" fill-opacity=\"0.6\" stroke=\"#34495e\" stroke-width=\"1\"/>\n"
       << "  </g>\n";
  }
  os << "  <g id=\"geodesic\">\n    <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
  for (size_t k = 0; k < geodesic.size(); ++k) {
    os << (k == 0 ? "" : " ") << sx(geodesic[k]) << ',' << sy(geodesic[k]);
  }
  os << "\"/>\n";
  for (const Point2& m : marks) {
    os << "    <circle cx=\"" << sx(m) << "\" cy=\"" << sy(m) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace sphgeo::cli
