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

#include "sphgeo/feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace sphgeo {

bool FeasibleRegion::add_crossing(const GreatArc& arc) {
  add_halfspace(arc.a().vec());
  return add_halfspace(-arc.b().vec());
}

bool FeasibleRegion::add_halfspace(const Vec3& normal) {
  const double len = normal.norm();
  if (!(len > 0.0)) {
    state_ = State::kEmpty;
    return false;
  }
  const Vec3 n = normal / len;
  switch (state_) {
    case State::kEmpty:
      return false;
    case State::kSphere:
      hemisphere_ = n;
      state_ = State::kHemisphere;
      return true;
    case State::kHemisphere: {
      const Vec3 cross = hemisphere_.cross(n);
      if (cross.norm() <= kMarginTol) {
        if (hemisphere_.dot(n) < 0.0) state_ = State::kEmpty;
        return !empty();
      }
      // Lune {u.h > 0, u.n > 0}: apexes +-w, one midpoint on each side.
      const Vec3 w = cross.normalized();
      Vec3 m1 = w.cross(hemisphere_).normalized();
      if (m1.dot(n) < 0.0) m1 = -m1;
      Vec3 m2 = w.cross(n).normalized();
      if (m2.dot(hemisphere_) < 0.0) m2 = -m2;
      vertices_ = {w, m1, -w, m2};
      state_ = State::kPolygon;
      return true;
    }
    case State::kPolygon:
      clip(n);
      return !empty();
  }
  return false;
}

void FeasibleRegion::clip(const Vec3& n) {
  const size_t k = vertices_.size();
  std::vector<double> s(k);
  double best = -1.0;
  for (size_t i = 0; i < k; ++i) {
    s[i] = n.dot(vertices_[i]);
    best = std::max(best, s[i]);
  }
  if (best <= kMarginTol) {
    state_ = State::kEmpty;
    vertices_.clear();
    return;
  }
  std::vector<Vec3> out;
  out.reserve(k + 2);
  for (size_t i = 0; i < k; ++i) {
    const size_t j = (i + 1) % k;
    if (s[i] >= 0.0) out.push_back(vertices_[i]);
    if ((s[i] > 0.0 && s[j] < 0.0) || (s[i] < 0.0 && s[j] > 0.0)) {
      out.push_back((std::abs(s[i]) * vertices_[j] + std::abs(s[j]) * vertices_[i]).normalized());
    }
  }
  // Collapse coincident neighbours left by vertices lying on the new circle.
  std::vector<Vec3> dedup;
  dedup.reserve(out.size());
  for (const Vec3& v : out) {
    if (dedup.empty() || (v - dedup.back()).norm() > 1e-15) dedup.push_back(v);
  }
  while (dedup.size() > 1 && (dedup.front() - dedup.back()).norm() <= 1e-15) dedup.pop_back();
  if (dedup.size() < 3) {
    state_ = State::kEmpty;
    vertices_.clear();
    return;
  }
  vertices_ = std::move(dedup);
}

std::optional<Vec3> FeasibleRegion::witness() const {
  switch (state_) {
    case State::kEmpty:
      return std::nullopt;
    case State::kSphere:
      return Vec3::UnitZ();
    case State::kHemisphere:
      return hemisphere_;
    case State::kPolygon: {
      Vec3 sum = Vec3::Zero();
      for (const Vec3& v : vertices_) sum += v;
      if (sum.norm() <= 1e-300) return std::nullopt;
      return sum.normalized();
    }
  }
  return std::nullopt;
}

bool feasible_pole_exists(std::span<const GreatArc> arcs) {
  FeasibleRegion region;
  for (const GreatArc& arc : arcs) {
    if (!region.add_crossing(arc)) return false;
  }
  return true;
}

}  // namespace sphgeo
