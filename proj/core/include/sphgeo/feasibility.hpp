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

#ifndef SPHGEO_FEASIBILITY_HPP_
#define SPHGEO_FEASIBILITY_HPP_

// Homogeneous linear feasibility on the sphere: is there a unit u with
// u.n > 0 for every constraint normal n?  The feasible set is an
// intersection of open hemispheres, kept as a convex spherical polygon and
// clipped one constraint at a time, so a search can extend a parent region
// with a single O(k) clip.

#include <optional>
#include <span>
#include <vector>

#include "sphgeo/sphtrig.hpp"

namespace sphgeo {

class FeasibleRegion {
 public:
  // Constraints whose best margin does not exceed this are infeasible.
  static constexpr double kMarginTol = 1e-12;

  FeasibleRegion() = default;

  // u.n > 0.  Returns false once the region is empty.
  bool add_halfspace(const Vec3& normal);
  // u.a > 0 > u.b: the equator of u crosses the arc from a's side to b's.
  bool add_crossing(const GreatArc& arc);

  bool empty() const { return state_ == State::kEmpty; }
  // An interior point when non-empty.
  std::optional<Vec3> witness() const;
  // Polygon vertices (empty unless at least two independent constraints).
  const std::vector<Vec3>& vertices() const { return vertices_; }

 private:
  enum class State { kSphere, kHemisphere, kPolygon, kEmpty };

  void clip(const Vec3& n);

  State state_ = State::kSphere;
  Vec3 hemisphere_ = Vec3::UnitZ();
  std::vector<Vec3> vertices_;
};

// True iff some unit u satisfies u.a_i > 0 > u.b_i for every arc, with
// margin above FeasibleRegion::kMarginTol.
bool feasible_pole_exists(std::span<const GreatArc> arcs);

}  // namespace sphgeo

#endif  // SPHGEO_FEASIBILITY_HPP_
