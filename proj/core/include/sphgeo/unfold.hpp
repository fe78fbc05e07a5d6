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

#ifndef SPHGEO_UNFOLD_HPP_
#define SPHGEO_UNFOLD_HPP_

// Developments of face sequences onto the unit sphere.
//
// Face copy i of a development is placed by a rotation P_i taking the
// canonical chart into the development.  Crossing i glues copy i+1 to copy i
// along the crossed edge, so P_{i+1} = P_i * S(crossing i), where S depends
// only on the directed edge.  After a full cycle, the copy of the starting
// face sits at P_n: that rotation is the holonomy of the sequence.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphgeo/solids.hpp"
#include "sphgeo/sphtrig.hpp"

namespace sphgeo {

class InvalidSequence : public std::invalid_argument {
 public:
  explicit InvalidSequence(const std::string& what) : std::invalid_argument(what) {}
};

struct DirectedCrossing {
  int from_face = 0;
  int edge = 0;
  int to_face = 0;

  // Edge first, so sequence order is edge-lexicographic.
  auto operator<=>(const DirectedCrossing& o) const {
    if (auto c = edge <=> o.edge; c != 0) return c;
    if (auto c = from_face <=> o.from_face; c != 0) return c;
    return to_face <=> o.to_face;
  }
  bool operator==(const DirectedCrossing&) const = default;

  DirectedCrossing reversed() const { return {to_face, edge, from_face}; }
};

// Cyclic list of directed edge crossings.
class CrossingSequence {
 public:
  CrossingSequence() = default;
  explicit CrossingSequence(std::vector<DirectedCrossing> crossings)
      : crossings_(std::move(crossings)) {}

  // Builds the cyclic sequence through the given edges; the face between
  // consecutive edges is the unique face containing both.
  static CrossingSequence from_edges(const SolidSpec& spec, std::span<const int> edges);
  // Vertex-pair form: each edge given by its two vertex ids.
  static CrossingSequence from_vertex_pairs(const SolidSpec& spec,
                                            std::span<const std::pair<int, int>> edges);

  const std::vector<DirectedCrossing>& crossings() const { return crossings_; }
  size_t size() const { return crossings_.size(); }
  bool empty() const { return crossings_.empty(); }
  const DirectedCrossing& operator[](size_t i) const { return crossings_[i]; }
  std::vector<int> edges() const;

  // Same cycle traversed the other way.
  CrossingSequence reversed() const;
  CrossingSequence rotated(size_t shift) const;
  // Image under a symmetry of the solid.
  CrossingSequence mapped(const SymmetryOp& op) const;

  // Throws InvalidSequence unless every crossing is a gluing of the spec,
  // consecutive crossings share the intermediate face and use distinct
  // edges, and the cycle has at least 3 crossings.
  void validate(const SolidSpec& spec) const;
  bool is_valid(const SolidSpec& spec) const;
  // True when the sequence is not a repetition of a shorter cycle.
  bool is_primitive() const;

  auto operator<=>(const CrossingSequence&) const = default;
  bool operator==(const CrossingSequence&) const = default;

 private:
  std::vector<DirectedCrossing> crossings_;
};

// Rotation, in chart coordinates of the from-face, that places the to-face's
// chart across the crossed edge.  Depends only on the directed edge.
Rotation3 local_step(const SolidSpec& spec, const DirectedCrossing& crossing);

// Placement of the next face copy.
Rotation3 step_rotation(const SolidSpec& spec, const Rotation3& placement,
                        const DirectedCrossing& crossing);

// Developed copy of the crossed edge, oriented so the face entered by the
// crossing lies to the left (a x b points into it).
GreatArc developed_edge(const SolidSpec& spec, const Rotation3& placement,
                        const DirectedCrossing& crossing);

struct Development {
  // n + 1 placements: copy i is the from-face of crossing i; copy n is the
  // starting face again.
  std::vector<Rotation3> placements;
  // n + 1 arcs: arc i is crossing i; arc n is crossing 0 on the last copy.
  std::vector<GreatArc> edges;
  Rotation3 closing;
};

Development develop(const SolidSpec& spec, const CrossingSequence& seq);
Rotation3 holonomy(const SolidSpec& spec, const CrossingSequence& seq);

// Memoized local steps for every directed (face, local edge).
class StepTable {
 public:
  explicit StepTable(const SolidSpec& spec);
  const Rotation3& step(int face, int local_edge) const {
    return steps_[face * sides_ + local_edge];
  }
  const Rotation3& step(const SolidSpec& spec, const DirectedCrossing& c) const;

 private:
  int sides_;
  std::vector<Rotation3> steps_;
};

}  // namespace sphgeo

#endif  // SPHGEO_UNFOLD_HPP_
