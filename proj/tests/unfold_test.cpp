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

#include "sphgeo/unfold.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sphgeo/finder.hpp"
#include "support/properties.hpp"

namespace sphgeo {
namespace {

constexpr double kAlg = 1e-12;

const SolidKind kKinds[] = {SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Cube};

double mid_alpha(SolidKind kind) {
  const AngleInterval iv = admissible_interval(kind);
  return 0.5 * (iv.lo + iv.hi);
}

// Walks once around `vertex`, crossing each edge that ends there.
CrossingSequence loop_around(const SolidSpec& s, int vertex) {
  int face = s.faces_around(vertex).front();
  int k = 0;
  while (s.face(face)[k] != vertex) ++k;
  // Leave through the local edge that starts at the vertex.
  std::vector<DirectedCrossing> out;
  for (int i = 0; i < s.vertex_degree(vertex); ++i) {
    const int e = s.edge_id(face, k);
    const Gluing& g = s.glued(face, k);
    out.push_back({face, e, g.face});
    // In the new face the crossed edge is local g.local_edge; the other edge
    // at the vertex is the one before it.
    face = g.face;
    const int n = s.sides();
    k = s.face(face)[g.local_edge] == vertex ? (g.local_edge + n - 1) % n
                                             : (g.local_edge + 1) % n;
  }
  return CrossingSequence(std::move(out));
}

TEST(LocalStep, CrossingAndReturningIsIdentity) {
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    for (int f = 0; f < s.face_count(); ++f) {
      for (int k = 0; k < s.sides(); ++k) {
        const DirectedCrossing c{f, s.edge_id(f, k), s.glued(f, k).face};
        const Rotation3 there_and_back = local_step(s, c) * local_step(s, c.reversed());
        EXPECT_TRUE(there_and_back.matrix().isIdentity(kAlg));
      }
    }
  }
}

TEST(StepRotation, SharedEdgeCoincidesAndFacesAreOnOppositeSides) {
  std::mt19937_64 rng(3);
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    const auto& chart = s.chart();
    const int n = s.sides();
    const CrossingSequence seq = testing::random_cycle(s, rng);
    const Development dev = develop(s, seq);
    for (size_t i = 0; i < seq.size(); ++i) {
      const GreatArc& arc = dev.edges[i];
      const Rotation3& next = dev.placements[i + 1];
      const Gluing& g = s.glued(seq[i].from_face, s.local_edge_of(seq[i].from_face, seq[i].edge));
      EXPECT_NEAR((next * chart[g.local_edge].vec() - arc.a().vec()).norm(), 0.0, kAlg);
      EXPECT_NEAR((next * chart[(g.local_edge + 1) % n].vec() - arc.b().vec()).norm(), 0.0, kAlg);
      const Vec3 normal = arc.a().vec().cross(arc.b().vec());
      EXPECT_GT(normal.dot(next * Vec3::UnitZ()), 0.0);
      EXPECT_LT(normal.dot(dev.placements[i] * Vec3::UnitZ()), 0.0);
    }
  }
}

TEST(Holonomy, LoopAroundAVertexMatchesConeAngle) {
  for (SolidKind kind : kKinds) {
    const AngleInterval iv = admissible_interval(kind);
    for (int i = 1; i < 8; ++i) {
      const double a = iv.lo + (iv.hi - iv.lo) * i / 8;
      const SolidSpec s = build_solid(kind, PlanarAngle(a));
      for (int v = 0; v < s.vertex_count(); ++v) {
        const CrossingSequence loop = loop_around(s, v);
        const Rotation3 r = holonomy(s, loop);
        const AxisAngle aa = axis_angle(r);
        // The deficit 2 pi - cone angle.
        EXPECT_NEAR(cone_angle(s, v), kTwoPi - aa.angle, 1e-10);
        // Rotation about the developed vertex (the vertex in the start chart).
        const auto& fv = s.face(loop[0].from_face);
        const int local = static_cast<int>(std::find(fv.begin(), fv.end(), v) - fv.begin());
        const Vec3 p = s.chart()[local].vec();
        EXPECT_NEAR((r * p - p).norm(), 0.0, 1e-10);
        const double turn = rotation_angle_about(r, p);
        const double cone = std::fmod(cone_angle(s, v), kTwoPi);
        EXPECT_TRUE(std::abs(turn - cone) < 1e-10 || std::abs(turn - (kTwoPi - cone)) < 1e-10)
            << turn << " vs " << cone;
      }
    }
  }
}

TEST(Develop, ReverseGivesInverseClosing) {
  std::mt19937_64 rng(5);
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    for (int i = 0; i < 50; ++i) {
      const CrossingSequence seq = testing::random_cycle(s, rng);
      const Rotation3 r = holonomy(s, seq) * holonomy(s, seq.reversed());
      EXPECT_TRUE(r.matrix().isIdentity(1e-10));
    }
  }
}

TEST(Develop, OctaTypeOneHasAProperAxis) {
  const SolidSpec s = build_solid(SolidKind::Octahedron, PlanarAngle(0.4 * kPi));
  const CrossingSequence seq = octa_type1_sequence(s);
  EXPECT_EQ(seq.size(), 6u);
  const Development dev = develop(s, seq);
  EXPECT_EQ(dev.placements.size(), 7u);
  EXPECT_EQ(dev.edges.size(), 7u);
  const AxisAngle aa = axis_angle(dev.closing);
  EXPECT_FALSE(aa.near_identity);
  EXPECT_LT(dev.closing.orthonormality_residual(), kAlg);
}

TEST(Develop, CubeTypeOneAxisIsTheFrontBackAxis) {
  const SolidSpec s = build_solid(SolidKind::Cube, PlanarAngle(0.6 * kPi));
  const CrossingSequence seq = cube_type1_sequence(s);
  const AxisAngle aa = axis_angle(holonomy(s, seq));
  // The front/back axis seen from the starting lateral face: horizontal
  // direction towards its front edge.
  const int f = seq[0].from_face;
  const auto& fv = s.face(f);
  const auto& c = s.chart();
  Vec3 axis = Vec3::Zero();
  for (int k = 0; k < 4; ++k) {
    if (fv[k] < 4 && fv[(k + 1) % 4] < 4) axis = c[k].vec() + c[(k + 1) % 4].vec();
  }
  axis.z() = 0.0;
  axis.normalize();
  EXPECT_NEAR(std::abs(aa.axis.vec().dot(axis)), 1.0, 1e-10);
}

TEST(Holonomy, CyclicShiftConjugates) {
  std::mt19937_64 rng(9);
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    for (int i = 0; i < 50; ++i) {
      const CrossingSequence seq = testing::random_cycle(s, rng);
      for (size_t k = 0; k < seq.size(); ++k) {
        EXPECT_NEAR(axis_angle(holonomy(s, seq)).angle, axis_angle(holonomy(s, seq.rotated(k))).angle,
                    1e-10);
      }
    }
  }
}

TEST(Holonomy, ProperSymmetryConjugates) {
  std::mt19937_64 rng(21);
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    for (const SymmetryOp& g : symmetry_group(s)) {
      const CrossingSequence seq = testing::random_cycle(s, rng);
      const double a = axis_angle(holonomy(s, seq)).angle;
      const double b = axis_angle(holonomy(s, seq.mapped(g))).angle;
      EXPECT_NEAR(a, b, 1e-10) << (g.proper ? "proper" : "improper");
    }
  }
}

TEST(Holonomy, OctaTypeTwoTurnsLessThanFullCircle) {
  const SolidSpec s = build_solid(SolidKind::Octahedron, PlanarAngle(0.45 * kPi));
  const auto path = closed_geodesic(s, octa_type2_sequence(s));
  ASSERT_TRUE(path.has_value());
  EXPECT_LT(path->holonomy_angle, kTwoPi);
  EXPECT_GT(path->holonomy_angle, 0.0);
}

TEST(CrossingSequence, Validation) {
  const SolidSpec s = build_solid(SolidKind::Tetrahedron, PlanarAngle(0.5 * kPi));
  EXPECT_THROW(CrossingSequence::from_edges(s, std::vector<int>{0, 1}), InvalidSequence);
  // Edges 0 (v0v1) and 5 (v2v3) are opposite: no shared face.
  EXPECT_THROW(CrossingSequence::from_edges(s, std::vector<int>{0, 5, 1}), InvalidSequence);
  const DirectedCrossing c{0, s.edge_id(0, 0), s.glued(0, 0).face};
  EXPECT_THROW(CrossingSequence({c, c, c}).validate(s), InvalidSequence);
  EXPECT_FALSE(CrossingSequence({c}).is_valid(s));
}

TEST(CrossingSequence, ShiftsReversalAndPrimitivity) {
  std::mt19937_64 rng(1);
  const SolidSpec s = build_solid(SolidKind::Cube, PlanarAngle(0.6 * kPi));
  const CrossingSequence seq = cube_type1_sequence(s);
  EXPECT_TRUE(seq.is_primitive());
  EXPECT_EQ(seq.reversed().reversed(), seq);
  EXPECT_EQ(seq.rotated(seq.size()), seq);
  std::vector<DirectedCrossing> twice(seq.crossings());
  twice.insert(twice.end(), seq.crossings().begin(), seq.crossings().end());
  const CrossingSequence doubled(twice);
  EXPECT_TRUE(doubled.is_valid(s));
  EXPECT_FALSE(doubled.is_primitive());
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(testing::random_cycle(s, rng).is_valid(s));
}

TEST(StepTable, MatchesLocalStep) {
  for (SolidKind kind : kKinds) {
    const SolidSpec s = build_solid(kind, PlanarAngle(mid_alpha(kind)));
    const StepTable table(s);
    for (int f = 0; f < s.face_count(); ++f) {
      for (int k = 0; k < s.sides(); ++k) {
        const DirectedCrossing c{f, s.edge_id(f, k), s.glued(f, k).face};
        EXPECT_EQ(table.step(s, c).matrix(), local_step(s, c).matrix());
      }
    }
  }
}

}  // namespace
}  // namespace sphgeo
