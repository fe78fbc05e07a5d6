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

#include "sphgeo/solids.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace sphgeo {

std::string_view to_string(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return "tetra";
    case SolidKind::Octahedron: return "octa";
    case SolidKind::Cube: return "cube";
  }
  return "unknown";
}

SolidKind parse_solid_kind(std::string_view name) {
  if (name == "tetra" || name == "tetrahedron") return SolidKind::Tetrahedron;
  if (name == "octa" || name == "octahedron") return SolidKind::Octahedron;
  if (name == "cube") return SolidKind::Cube;
  throw DomainError("unknown solid '" + std::string(name) + "'");
}

AngleInterval admissible_interval(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return {kPi / 3.0, 2.0 * kPi / 3.0};
    case SolidKind::Octahedron: return {kPi / 3.0, kPi / 2.0};
    case SolidKind::Cube: return {kPi / 2.0, 2.0 * kPi / 3.0};
  }
  return {0.0, 0.0};
}

int face_sides(SolidKind kind) { return kind == SolidKind::Cube ? 4 : 3; }

namespace {

struct Layout {
  std::vector<Vec3> coords;
  std::vector<std::vector<int>> faces;
};

Layout layout_for(SolidKind kind) {
  Layout l;
  switch (kind) {
    case SolidKind::Tetrahedron:
      l.coords = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      l.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      break;
    case SolidKind::Octahedron:
      l.coords = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      l.faces = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
                 {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 0, 5}};
      break;
    case SolidKind::Cube:
      l.coords = {{-1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1},
                  {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1}};
      l.faces = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4},
                 {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
      break;
  }
  // Counter-clockwise from outside, smallest vertex id first.
  for (auto& f : l.faces) {
    Vec3 centroid = Vec3::Zero();
    for (int v : f) centroid += l.coords[v];
    const Vec3 n = (l.coords[f[1]] - l.coords[f[0]]).cross(l.coords[f[2]] - l.coords[f[0]]);
    if (n.dot(centroid) < 0.0) std::reverse(f.begin(), f.end());
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  }
  return l;
}

// Generators as linear maps of the reference coordinates.
std::array<Mat3, 2> generators_for(SolidKind kind) {
  Mat3 g0;
  Mat3 g1;
  if (kind == SolidKind::Tetrahedron) {
    // S4 rotoreflection about z and C3 about (1,1,1).
    g0 << 0, 1, 0, -1, 0, 0, 0, 0, -1;
    g1 << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  } else {
    // C4 about z and the S6 rotoreflection -C3.
    g0 << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    g1 << 0, 0, -1, -1, 0, 0, 0, -1, 0;
  }
  return {g0, g1};
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

SolidSpec build_solid(SolidKind kind, PlanarAngle alpha) {
  const AngleInterval iv = admissible_interval(kind);
  if (!iv.contains(alpha.radians())) {
    std::ostringstream os;
    os.precision(17);
    os << to_string(kind) << ": planar angle " << alpha.radians()
       << " is not admissible; required open interval (" << iv.lo << ", "
       << iv.hi << ")";
    throw AdmissibilityError(os.str());
  }

  SolidSpec s(kind, alpha);
  Layout l = layout_for(kind);
  s.sides_ = face_sides(kind);
  s.vertex_count_ = static_cast<int>(l.coords.size());
  s.coords_ = std::move(l.coords);
  s.faces_ = std::move(l.faces);

  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> incidences;
  for (int f = 0; f < s.face_count(); ++f) {
    const auto& fv = s.faces_[f];
    for (int k = 0; k < s.sides_; ++k) {
      const int a = fv[k];
      const int b = fv[(k + 1) % s.sides_];
      incidences[{std::min(a, b), std::max(a, b)}].emplace_back(f, k);
    }
  }
  s.face_edges_.assign(s.face_count(), std::vector<int>(s.sides_, -1));
  s.gluing_.assign(s.face_count(), std::vector<Gluing>(s.sides_));
  for (const auto& [key, inc] : incidences) {
    if (inc.size() != 2) throw DomainError("build_solid: edge is not shared by two faces");
    Edge e;
    e.v0 = key.first;
    e.v1 = key.second;
    const int id = static_cast<int>(s.edges_.size());
    for (int i = 0; i < 2; ++i) {
      e.faces[i] = inc[i].first;
      e.local[i] = inc[i].second;
      s.face_edges_[inc[i].first][inc[i].second] = id;
      const auto& fa = s.faces_[inc[i].first];
      const auto& fb = s.faces_[inc[1 - i].first];
      Gluing g;
      g.face = inc[1 - i].first;
      g.local_edge = inc[1 - i].second;
      g.flip = fa[inc[i].second] == fb[(inc[1 - i].second + 1) % s.sides_];
      s.gluing_[inc[i].first][inc[i].second] = g;
    }
    s.edges_.push_back(e);
  }

  s.side_length_ = kind == SolidKind::Cube ? cube_edge(alpha) : tetra_edge(alpha);
  s.circumradius_ = circumradius(s.sides_, alpha);
  const double rho = s.circumradius_;
  for (int k = 0; k < s.sides_; ++k) {
    const double phi = kTwoPi * k / s.sides_;
    s.chart_.push_back(SpherePoint::normalized(
        Vec3(std::sin(rho) * std::cos(phi), std::sin(rho) * std::sin(phi), std::cos(rho))));
  }
  return s;
}

int SolidSpec::edge_id(int face, int local_edge) const {
  return face_edges_.at(face).at(mod(local_edge, sides_));
}

int SolidSpec::edge_between(int v0, int v1) const {
  const int a = std::min(v0, v1);
  const int b = std::max(v0, v1);
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].v0 == a && edges_[e].v1 == b) return e;
  }
  return -1;
}

int SolidSpec::local_edge_of(int face, int edge) const {
  const auto& fe = face_edges_.at(face);
  for (int k = 0; k < sides_; ++k) {
    if (fe[k] == edge) return k;
  }
  return -1;
}

int SolidSpec::opposite_face(int face, int edge) const {
  const Edge& e = edges_.at(edge);
  if (e.faces[0] == face) return e.faces[1];
  if (e.faces[1] == face) return e.faces[0];
  return -1;
}

int SolidSpec::face_containing(int edge_a, int edge_b) const {
  if (edge_a == edge_b) return -1;
  const Edge& a = edges_.at(edge_a);
  const Edge& b = edges_.at(edge_b);
  for (int fa : a.faces) {
    for (int fb : b.faces) {
      if (fa == fb) return fa;
    }
  }
  return -1;
}

const Gluing& SolidSpec::glued(int face, int local_edge) const {
  return gluing_.at(face).at(mod(local_edge, sides_));
}

const std::vector<SpherePoint>& SolidSpec::face_chart(int face) const {
  if (face < 0 || face >= face_count()) throw DomainError("face id out of range");
  return chart_;
}

std::vector<int> SolidSpec::faces_around(int vertex) const {
  int start = -1;
  for (int f = 0; f < face_count() && start < 0; ++f) {
    if (std::find(faces_[f].begin(), faces_[f].end(), vertex) != faces_[f].end()) start = f;
  }
  if (start < 0) throw DomainError("vertex id out of range");
  std::vector<int> ring;
  int f = start;
  do {
    ring.push_back(f);
    const auto& fv = faces_[f];
    const int k = static_cast<int>(std::find(fv.begin(), fv.end(), vertex) - fv.begin());
    f = glued(f, k).face;  // across the edge leaving the vertex
  } while (f != start && ring.size() <= faces_.size());
  return ring;
}

int SolidSpec::vertex_degree(int vertex) const {
  return static_cast<int>(faces_around(vertex).size());
}

// ---------------------------------------------------------------------------

namespace {

SymmetryOp from_vertex_perm(const SolidSpec& spec, const std::vector<int>& perm) {
  SymmetryOp op;
  op.vertex_perm = perm;
  const int n = spec.sides();
  for (const Edge& e : spec.edges()) {
    const int img = spec.edge_between(perm[e.v0], perm[e.v1]);
    if (img < 0) throw DomainError("vertex permutation does not preserve edges");
    op.edge_perm.push_back(img);
  }
  op.face_perm.assign(spec.face_count(), -1);
  op.local_shift.assign(spec.face_count(), 0);
  bool orientation_known = false;
  for (int f = 0; f < spec.face_count(); ++f) {
    const auto& fv = spec.face(f);
    std::vector<int> image;
    for (int v : fv) image.push_back(perm[v]);
    std::vector<int> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    for (int g = 0; g < spec.face_count(); ++g) {
      std::vector<int> gv = spec.face(g);
      std::sort(gv.begin(), gv.end());
      if (gv == sorted_image) op.face_perm[f] = g;
    }
    if (op.face_perm[f] < 0) throw DomainError("vertex permutation does not preserve faces");
    const auto& gv = spec.face(op.face_perm[f]);
    const int j0 = static_cast<int>(std::find(gv.begin(), gv.end(), image[0]) - gv.begin());
    const int j1 = static_cast<int>(std::find(gv.begin(), gv.end(), image[1]) - gv.begin());
    const bool proper = mod(j1 - j0, n) == 1;
    if (!orientation_known) {
      op.proper = proper;
      orientation_known = true;
    } else if (op.proper != proper) {
      throw DomainError("vertex permutation mixes orientations");
    }
    op.local_shift[f] = j0;
  }
  return op;
}

std::vector<int> perm_from_matrix(const SolidSpec& spec, const Mat3& m) {
  const auto& c = spec.reference_coords();
  std::vector<int> perm(c.size(), -1);
  for (size_t v = 0; v < c.size(); ++v) {
    const Vec3 img = m * c[v];
    for (size_t w = 0; w < c.size(); ++w) {
      if ((img - c[w]).norm() < 1e-9) perm[v] = static_cast<int>(w);
    }
    if (perm[v] < 0) throw DomainError("generator does not preserve the vertex set");
  }
  return perm;
}

}  // namespace

SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b) {
  SymmetryOp c;
  const size_t nv = b.vertex_perm.size();
  c.vertex_perm.resize(nv);
  for (size_t v = 0; v < nv; ++v) c.vertex_perm[v] = a.vertex_perm[b.vertex_perm[v]];
  c.edge_perm.resize(b.edge_perm.size());
  for (size_t e = 0; e < b.edge_perm.size(); ++e) c.edge_perm[e] = a.edge_perm[b.edge_perm[e]];
  c.face_perm.resize(b.face_perm.size());
  c.local_shift.resize(b.face_perm.size());
  // Polygon size from the edge/face count relation 2E = nF.
  const int n = static_cast<int>(2 * b.edge_perm.size() / b.face_perm.size());
  for (size_t f = 0; f < b.face_perm.size(); ++f) {
    const int g = b.face_perm[f];
    c.face_perm[f] = a.face_perm[g];
    const int sa = a.local_shift[g];
    const int sb = b.local_shift[f];
    c.local_shift[f] = mod(b.proper ? sa + (a.proper ? sb : -sb) : (a.proper ? sa + sb : sa - sb), n);
  }
  c.proper = a.proper == b.proper;
  return c;
}

std::vector<SymmetryOp> symmetry_group(const SolidSpec& spec) {
  std::vector<int> id(spec.vertex_count());
  for (int v = 0; v < spec.vertex_count(); ++v) id[v] = v;
  std::vector<SymmetryOp> gens;
  for (const Mat3& m : generators_for(spec.kind())) {
    gens.push_back(from_vertex_perm(spec, perm_from_matrix(spec, m)));
  }
  std::vector<SymmetryOp> group{from_vertex_perm(spec, id)};
  std::set<std::vector<int>> seen{id};
  std::deque<size_t> frontier{0};
  while (!frontier.empty()) {
    const size_t i = frontier.front();
    frontier.pop_front();
    for (const SymmetryOp& g : gens) {
      SymmetryOp next = compose(g, group[i]);
      if (seen.insert(next.vertex_perm).second) {
        group.push_back(std::move(next));
        frontier.push_back(group.size() - 1);
      }
    }
  }
  return group;
}

double cone_angle(const SolidSpec& spec, int vertex) {
  return spec.vertex_degree(vertex) * spec.alpha().radians();
}

}  // namespace sphgeo
