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

#ifndef SPHGEO_SOLIDS_HPP_
#define SPHGEO_SOLIDS_HPP_

// Combinatorial and metric model of the regular spherical tetrahedron,
// octahedron and cube.
//
// Vertex labels (0-based ids):
//   tetrahedron  A1..A4                 -> 0..3
//   octahedron   A1..A4 square, A5 top, A6 bottom -> 0..5
//   cube         A1..A4 front facet, A'1..A'4 back facet -> 0..3, 4..7
//                (A_k A'_k are the lateral edges)
//
// Every face is a cyclic vertex list, counter-clockwise seen from outside.
// Edge ids are assigned in (smaller vertex id, larger vertex id) order, so
// comparing edge ids compares edges lexicographically.
//
// All faces share one canonical chart: the regular spherical n-gon centered
// at the north pole with chart vertex 0 on the prime meridian and chart
// vertex k at azimuth 2 pi k / n.  Local edge k of a face joins its local
// vertices k and k+1.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sphgeo/sphtrig.hpp"

namespace sphgeo {

enum class SolidKind { Tetrahedron, Octahedron, Cube };

std::string_view to_string(SolidKind kind);
// Accepts "tetra"/"tetrahedron", "octa"/"octahedron", "cube".
SolidKind parse_solid_kind(std::string_view name);

struct AngleInterval {
  double lo;
  double hi;  // both open
  bool contains(double alpha) const { return alpha > lo && alpha < hi; }
};

AngleInterval admissible_interval(SolidKind kind);
int face_sides(SolidKind kind);

class AdmissibilityError : public DomainError {
 public:
  explicit AdmissibilityError(const std::string& what) : DomainError(what) {}
};

struct Edge {
  int v0 = 0;  // v0 < v1
  int v1 = 0;
  // Faces on either side, with the local edge index in each.
  std::array<int, 2> faces{};
  std::array<int, 2> local{};
};

// Where a directed edge (face, local edge) is glued.
struct Gluing {
  int face = 0;
  int local_edge = 0;
  // True when the partner traverses the shared edge in the opposite vertex
  // order, which is always the case for consistently oriented faces.
  bool flip = true;
};

class SolidSpec {
 public:
  SolidKind kind() const { return kind_; }
  PlanarAngle alpha() const { return alpha_; }
  int sides() const { return sides_; }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_.at(f); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  int edge_id(int face, int local_edge) const;
  int edge_between(int v0, int v1) const;  // -1 when not an edge
  // Local index of `edge` in `face`, or -1.
  int local_edge_of(int face, int edge) const;
  // The face across `edge` from `face`.
  int opposite_face(int face, int edge) const;
  // Unique face containing both edges, or -1.
  int face_containing(int edge_a, int edge_b) const;
  const Gluing& glued(int face, int local_edge) const;

  // Canonical chart of the face (identical for every face).
  const std::vector<SpherePoint>& face_chart(int face) const;
  const std::vector<SpherePoint>& chart() const { return chart_; }
  double side_length() const { return side_length_; }
  double circumradius() const { return circumradius_; }

  // Faces incident to the vertex, in cyclic order around it.
  std::vector<int> faces_around(int vertex) const;
  int vertex_degree(int vertex) const;

  // Reference Euclidean coordinates of the vertices (used to derive labels
  // and symmetry generators; not part of the intrinsic metric).
  const std::vector<Vec3>& reference_coords() const { return coords_; }

 private:
  friend SolidSpec build_solid(SolidKind kind, PlanarAngle alpha);
  SolidSpec(SolidKind kind, PlanarAngle alpha) : kind_(kind), alpha_(alpha) {}

  SolidKind kind_;
  PlanarAngle alpha_;
  int sides_ = 3;
  int vertex_count_ = 0;
  std::vector<Vec3> coords_;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> face_edges_;
  std::vector<std::vector<Gluing>> gluing_;
  std::vector<SpherePoint> chart_;
  double side_length_ = 0.0;
  double circumradius_ = 0.0;
};

// Throws AdmissibilityError when alpha is outside the solid's open interval.
SolidSpec build_solid(SolidKind kind, PlanarAngle alpha);

// A symmetry of the solid as a combinatorial automorphism.
struct SymmetryOp {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  std::vector<int> face_perm;
  // Local index shift: local vertex k of face f maps to local vertex
  // (proper ? k + shift[f] : shift[f] - k) mod n of face_perm[f].
  std::vector<int> local_shift;
  bool proper = true;

  // (a * b) applies b first.
  friend SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b);
  friend bool operator==(const SymmetryOp& a, const SymmetryOp& b) {
    return a.vertex_perm == b.vertex_perm;
  }
};

// Full isometry group (24 / 48 / 48), identity first, generated from two
// explicit generators and closed under composition.  Deterministic order.
std::vector<SymmetryOp> symmetry_group(const SolidSpec& spec);

// Total facet angle at the vertex: degree * alpha.
double cone_angle(const SolidSpec& spec, int vertex);

}  // namespace sphgeo

#endif  // SPHGEO_SOLIDS_HPP_
