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

#ifndef SPHGEO_FINDER_HPP_
#define SPHGEO_FINDER_HPP_

// Simple closed geodesics from crossing sequences.
//
// A closed geodesic realizing a sequence develops into a great circle that
// the holonomy maps onto itself, so its pole is the holonomy axis and its
// length the holonomy angle.  Solving a sequence is therefore algebraic: no
// free start parameter survives, and each sequence has at most one geodesic.
//
// The enumerator walks crossing sequences depth first from one fixed
// directed crossing (the symmetry group is transitive on directed crossings,
// so every class has a representative through it), pruned by pole
// feasibility and by a lower bound on the developed length.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sphgeo/solids.hpp"
#include "sphgeo/sphtrig.hpp"
#include "sphgeo/unfold.hpp"

namespace sphgeo {

struct Tolerances {
  double closure = 1e-9;
  // Crossings closer than this (edge fraction) to a vertex are rejected.
  double vertex = 1e-9;
  double simplicity = 1e-10;
};

struct PathCrossing {
  int edge = 0;
  // Fraction along the edge from its smaller vertex id to the larger one.
  double t = 0.0;
  // Angle in (0, pi) between the direction of travel and the edge direction
  // (smaller id to larger id), measured in the face being left...
  double incidence = 0.0;
  // ...and in the face being entered.
  double incidence_entered = 0.0;
  // Developed position and azimuth about the pole.
  Vec3 point = Vec3::Zero();
  double azimuth = 0.0;
};

struct GeodesicPath {
  CrossingSequence seq;
  std::vector<PathCrossing> crossings;
  // Arc i runs from crossing i to crossing i+1 inside face seq[i].to_face.
  std::vector<double> arc_lengths;
  double total_length = 0.0;
  SpherePoint pole;
  // Rotation angle of the holonomy about the pole, in (0, 2 pi).
  double holonomy_angle = 0.0;
  double closure_residual = 0.0;
};

// Closed geodesic realizing the sequence, simple or not.
std::optional<GeodesicPath> closed_geodesic(const SolidSpec& spec, const CrossingSequence& seq,
                                            const Tolerances& tol = {});

// Closed geodesic realizing the sequence that is also simple.
std::optional<GeodesicPath> solve_sequence(const SolidSpec& spec, const CrossingSequence& seq,
                                           const Tolerances& tol = {});

// No two arcs meet on the surface except consecutive arcs at their shared
// crossing.  Checked per face from the order of the arc endpoints along the
// face boundary.
bool is_simple(const SolidSpec& spec, const GeodesicPath& path, double tol = 1e-10);

// ---------------------------------------------------------------------------

// Minimum over cyclic shifts and reversal (no symmetries).
CrossingSequence cycle_normal_form(const CrossingSequence& seq);

// Orbit machinery for one solid.
class Canonicalizer {
 public:
  explicit Canonicalizer(const SolidSpec& spec);

  const std::vector<SymmetryOp>& group() const { return group_; }
  // Lexicographic minimum over cyclic shifts, reversal and symmetry images.
  CrossingSequence canonicalize(const CrossingSequence& seq) const;
  // Number of distinct unoriented closed curves in the symmetry orbit.
  int orbit_size(const CrossingSequence& seq) const;

 private:
  std::vector<SymmetryOp> group_;
};

CrossingSequence canonicalize(const SolidSpec& spec, const CrossingSequence& seq);

// ---------------------------------------------------------------------------

// Tetrahedron type: p crossings on each edge of one opposite pair, q on each
// of another, p+q on each of the third.
struct GeodesicType {
  int p = 0;
  int q = 1;

  int form() const { return p * p + p * q + q * q; }
  int crossings() const { return 4 * (p + q); }
  auto operator<=>(const GeodesicType&) const = default;
};

class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

// Throws ClassificationError unless 0 <= p <= q, gcd(p, q) = 1, q >= 1.
GeodesicType make_type(int p, int q);

// From crossing counts of the three opposite-edge pairs (any order).
GeodesicType type_from_pair_counts(int a, int b, int c);

GeodesicType classify_tetra_type(const SolidSpec& spec, const GeodesicPath& path);

enum class OctaType { kType1, kType2 };
enum class CubeType { kType1, kType2, kType3 };
using ClassTag = std::variant<std::monostate, GeodesicType, OctaType, CubeType>;

ClassTag classify(const SolidSpec& spec, const GeodesicPath& path);
std::string tag_label(const ClassTag& tag);

struct GeodesicClass {
  CrossingSequence canonical;
  GeodesicPath representative;
  int orbit_size = 0;
  ClassTag tag;
};

// Solves the sequence and, when it is a simple closed geodesic, returns its
// class with the representative re-solved from the canonical sequence.
std::optional<GeodesicClass> solve_class(const SolidSpec& spec, const CrossingSequence& seq,
                                         const Tolerances& tol = {});

// ---------------------------------------------------------------------------

struct SearchOptions {
  int max_crossings = 12;
  bool prune = true;
  Tolerances tol;
};

struct SearchStats {
  long nodes = 0;
  long candidates = 0;
  long pruned_feasibility = 0;
  long pruned_length = 0;
};

// Every simple closed geodesic class with at most max_crossings crossings,
// in canonical order.
std::vector<GeodesicClass> enumerate_classes(const SolidSpec& spec, const SearchOptions& opts,
                                             SearchStats* stats = nullptr);
std::vector<GeodesicClass> enumerate_classes(const SolidSpec& spec, int max_crossings);

// Searches sequences of exactly 4(p+q) crossings with the type's per-edge
// counts for a simple closed geodesic of the given type.
std::optional<GeodesicClass> find_tetra_type(const SolidSpec& spec, GeodesicType type,
                                             const SearchOptions& opts = {},
                                             SearchStats* stats = nullptr);

// Known constructions, used as fixtures and by the CLI.
CrossingSequence octa_type1_sequence(const SolidSpec& spec);
CrossingSequence octa_type2_sequence(const SolidSpec& spec);
CrossingSequence cube_type1_sequence(const SolidSpec& spec);
CrossingSequence cube_type2_sequence(const SolidSpec& spec);
CrossingSequence cube_type3_sequence(const SolidSpec& spec);

}  // namespace sphgeo

#endif  // SPHGEO_FINDER_HPP_
