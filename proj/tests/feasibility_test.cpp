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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sphgeo/finder.hpp"
#include "sphgeo/unfold.hpp"

namespace sphgeo {
namespace {

SpherePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return SpherePoint::normalized(Vec3(n(rng), n(rng), n(rng)));
}

bool satisfies(const Vec3& u, const GreatArc& arc, double margin = 0.0) {
  return u.dot(arc.a().vec()) > margin && u.dot(arc.b().vec()) < -margin;
}

// Fibonacci lattice, dense enough to hit any region wider than ~0.01 rad.
std::vector<Vec3> lattice(int n) {
  std::vector<Vec3> out;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(1.0 - z * z);
    out.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
  }
  return out;
}

TEST(FeasibleRegion, SingleArcIsFeasible) {
  const GreatArc arc(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0));
  FeasibleRegion r;
  EXPECT_TRUE(r.add_crossing(arc));
  ASSERT_TRUE(r.witness().has_value());
  EXPECT_TRUE(satisfies(*r.witness(), arc));
}

TEST(FeasibleRegion, ContradictoryArcsAreInfeasible) {
  const GreatArc arc(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0));
  EXPECT_FALSE(feasible_pole_exists(std::vector<GreatArc>{arc, arc.reversed()}));
  FeasibleRegion r;
  EXPECT_TRUE(r.add_halfspace(Vec3::UnitZ()));
  EXPECT_FALSE(r.add_halfspace(-Vec3::UnitZ()));
  EXPECT_TRUE(r.empty());
  EXPECT_FALSE(r.witness().has_value());
}

TEST(FeasibleRegion, ThreeOctantHalfspaces) {
  FeasibleRegion r;
  EXPECT_TRUE(r.add_halfspace(Vec3::UnitX()));
  EXPECT_TRUE(r.add_halfspace(Vec3::UnitY()));
  EXPECT_TRUE(r.add_halfspace(Vec3::UnitZ()));
  EXPECT_EQ(r.vertices().size(), 3u);
  const Vec3 w = *r.witness();
  EXPECT_GT(w.minCoeff(), 0.0);
  EXPECT_FALSE(r.add_halfspace(-Vec3(1, 1, 1)));
}

TEST(FeasibleRegion, AgreesWithSamplingOracle) {
  std::mt19937_64 rng(77);
  const auto grid = lattice(20000);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<GreatArc> arcs;
    for (int i = 0; i < m; ++i) arcs.emplace_back(random_point(rng), random_point(rng));
    FeasibleRegion region;
    bool ok = true;
    for (const auto& a : arcs) ok = region.add_crossing(a) && ok;
    // Any sample satisfying every constraint with margin proves feasibility.
    bool sampled = false;
    for (const Vec3& u : grid) {
      bool all = true;
      for (const auto& a : arcs) all = all && satisfies(u, a, 1e-6);
      if (all) {
        sampled = true;
        break;
      }
    }
    if (sampled) EXPECT_TRUE(ok) << "trial " << trial;
    if (ok) {
      ASSERT_TRUE(region.witness().has_value());
      for (const auto& a : arcs) EXPECT_TRUE(satisfies(*region.witness(), a)) << "trial " << trial;
      ++feasible;
    } else {
      ++infeasible;
    }
  }
  // Both outcomes are exercised.
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 20);
}

TEST(FeasibleRegion, OctaTypeTwoPrefixesAreFeasible) {
  const SolidSpec s = build_solid(SolidKind::Octahedron, PlanarAngle(0.45 * kPi));
  const CrossingSequence seq = octa_type2_sequence(s);
  const Development dev = develop(s, seq);
  FeasibleRegion region;
  for (size_t i = 0; i < seq.size(); ++i) {
    ASSERT_TRUE(region.add_crossing(dev.edges[i])) << "prefix " << i + 1;
  }
  const auto path = closed_geodesic(s, seq);
  ASSERT_TRUE(path.has_value());
  for (size_t i = 0; i < seq.size(); ++i) EXPECT_TRUE(satisfies(path->pole.vec(), dev.edges[i]));
}

}  // namespace
}  // namespace sphgeo
