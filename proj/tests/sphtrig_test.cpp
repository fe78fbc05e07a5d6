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

#include "sphgeo/sphtrig.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sphgeo/solids.hpp"

namespace sphgeo {
namespace {

constexpr double kAlg = 1e-12;

PlanarAngle A(double x) { return PlanarAngle(x); }

// Angle at the vertex opposite `opposite`, by the law of cosines for sides.
double angle_oracle(double opposite, double s1, double s2) {
  return std::acos((std::cos(opposite) - std::cos(s1) * std::cos(s2)) /
                   (std::sin(s1) * std::sin(s2)));
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec3 v(n(rng), n(rng), n(rng));
  return v.normalized();
}

TEST(ClampedAcos, ClampsOnlyRoundingExcursions) {
  EXPECT_DOUBLE_EQ(clamped_acos(1.0 + 5e-13), 0.0);
  EXPECT_DOUBLE_EQ(clamped_acos(-1.0 - 5e-13), kPi);
  EXPECT_THROW(clamped_acos(1.0 + 1e-9), DomainError);
  EXPECT_THROW(clamped_acos(-1.0 - 1e-9), DomainError);
}

TEST(PlanarAngle, RejectsOutsideOpenInterval) {
  EXPECT_THROW(PlanarAngle{0.0}, DomainError);
  EXPECT_THROW(PlanarAngle{kPi}, DomainError);
  EXPECT_THROW(PlanarAngle{std::nan("")}, DomainError);
  EXPECT_DOUBLE_EQ(PlanarAngle(1.0).half(), 0.5);
}

TEST(SpherePoint, ChecksNorm) {
  EXPECT_NO_THROW(SpherePoint(0.0, 0.0, 1.0));
  EXPECT_THROW(SpherePoint(0.0, 0.0, 1.001), DomainError);
  EXPECT_NEAR(SpherePoint::normalized(Vec3(3, 4, 0)).x(), 0.6, kAlg);
}

TEST(CosSide, Examples) {
  EXPECT_NEAR(cos_side(kPi / 2, kPi / 2, kPi / 2), kPi / 2, kAlg);
  EXPECT_NEAR(cos_side(1.1, 0.4, 1e-9), 0.7, 1e-8);
  EXPECT_NEAR(cos_side(kPi / 3, kPi / 3, kPi / 2), std::acos(0.25), kAlg);
  EXPECT_NEAR(cos_side(kPi / 3, kPi / 3, kPi / 2), 1.31812, 1e-5);
}

TEST(SideFromMixed, CubeHalfSquareTriangle) {
  const double alpha = 0.55 * kPi;
  const double as = cube_edge(A(alpha));
  EXPECT_NEAR(side_from_mixed(as, alpha / 2, alpha / 2, alpha), as, kAlg);
}

TEST(SideFromMixed, OctantTriangle) {
  EXPECT_NEAR(side_from_mixed(kPi / 2, kPi / 2, kPi / 2, kPi / 2), kPi / 2, kAlg);
}

TEST(SideFromMixed, RoundTripWithCosSide) {
  const double a = kPi / 3, c = kPi / 3, angle_b = kPi / 2;
  const double b = cos_side(a, c, angle_b);
  const double angle_a = angle_oracle(a, b, c);
  const double angle_c = angle_oracle(c, a, b);
  EXPECT_NEAR(side_from_mixed(a, angle_a, angle_b, angle_c), b, 1e-10);
}

TEST(SideFromMixed, InconsistentDataIsDomainError) {
  EXPECT_THROW(side_from_mixed(0.1, 0.2, 3.0, 3.0), DomainError);
}

TEST(TetraEdge, Examples) {
  EXPECT_NEAR(tetra_edge(A(kPi / 2)), kPi / 2, kAlg);
  EXPECT_LT(tetra_edge(A(kPi / 3 + 1e-9)), 1e-3);
  EXPECT_NEAR(tetra_edge(A(2 * kPi / 3)), std::acos(-1.0 / 3.0), kAlg);
  EXPECT_NEAR(tetra_edge(A(2 * kPi / 3)), 1.910633, 1e-6);
  EXPECT_THROW(tetra_edge(A(0.3 * kPi)), DomainError);
  EXPECT_THROW(tetra_edge(A(0.7 * kPi)), DomainError);
}

TEST(CubeEdge, Examples) {
  EXPECT_LT(cube_edge(A(kPi / 2 + 1e-9)), 1e-3);
  EXPECT_NEAR(cube_edge(A(2 * kPi / 3)), std::acos(1.0 / 3.0), kAlg);
  EXPECT_NEAR(cube_edge(A(2 * kPi / 3)), 1.230959, 1e-6);
  const double cot = 1.0 / std::tan(0.275 * kPi);
  EXPECT_NEAR(cube_edge(A(0.55 * kPi)), std::acos(cot * cot), kAlg);
  EXPECT_THROW(cube_edge(A(0.45 * kPi)), DomainError);
}

TEST(CubeDiagonal, Examples) {
  EXPECT_LT(cube_diagonal(A(kPi / 2 + 1e-9)), 1e-3);
  EXPECT_NEAR(cube_diagonal(A(2 * kPi / 3)), std::acos(-1.0 / 3.0), kAlg);
  // Opposite vertices of the built square.
  const SolidSpec cube = build_solid(SolidKind::Cube, A(0.6 * kPi));
  const auto& c = cube.chart();
  EXPECT_NEAR(cube_diagonal(A(0.6 * kPi)), arc_distance(c[0].vec(), c[2].vec()), 1e-10);
}

TEST(SquareMidline, Examples) {
  EXPECT_NEAR(square_midline(A(kPi / 2)), 0.0, 1e-7);
  EXPECT_NEAR(square_midline(A(2 * kPi / 3)), kPi / 2, kAlg);
  const SolidSpec cube = build_solid(SolidKind::Cube, A(0.6 * kPi));
  const auto& c = cube.chart();
  const Vec3 m0 = (c[0].vec() + c[1].vec()).normalized();
  const Vec3 m2 = (c[2].vec() + c[3].vec()).normalized();
  EXPECT_NEAR(square_midline(A(0.6 * kPi)), arc_distance(m0, m2), 1e-10);
}

TEST(Circumradius, Examples) {
  EXPECT_NEAR(circumradius(4, A(2 * kPi / 3)), std::acos(1.0 / std::sqrt(3.0)), kAlg);
  EXPECT_NEAR(circumradius(4, A(2 * kPi / 3)), cube_diagonal(A(2 * kPi / 3)) / 2, kAlg);
  EXPECT_NEAR(circumradius(3, A(kPi / 2)), std::acos(1.0 / std::sqrt(3.0)), kAlg);
  EXPECT_LT(circumradius(4, A(kPi / 2 + 1e-9)), 1e-3);
  EXPECT_THROW(circumradius(5, A(2.0)), DomainError);
}

TEST(Monotone, ClosedFormsIncreaseOnGrid) {
  double prev_t = -1, prev_e = -1, prev_d = -1, prev_h = -1;
  for (double a = kPi / 3 + 1e-3; a <= 2 * kPi / 3; a += 1e-3) {
    const double t = tetra_edge(A(a));
    EXPECT_GT(t, prev_t);
    prev_t = t;
    if (a > kPi / 2) {
      const double e = cube_edge(A(a)), d = cube_diagonal(A(a)), h = square_midline(A(a));
      EXPECT_GT(e, prev_e);
      EXPECT_GT(d, prev_d);
      EXPECT_GT(h, prev_h);
      prev_e = e;
      prev_d = d;
      prev_h = h;
    }
  }
}

TEST(Identities, TetraHalfEdgeSineSquared) {
  for (double a = kPi / 3 + 1e-3; a <= 2 * kPi / 3; a += 1e-3) {
    const double s = std::sin(a / 2);
    const double x = 4 * s * s;
    const double h = std::sin(tetra_edge(A(a)) / 2);
    EXPECT_NEAR(h * h, (x - 1) / x, kAlg) << a;
  }
}

TEST(Identities, CubeHalfEdgeSine) {
  for (double a = kPi / 2 + 1e-3; a <= 2 * kPi / 3; a += 1e-3) {
    const double lhs = std::sin(cube_edge(A(a)) / 2);
    const double rhs = std::sqrt(-std::cos(a)) / (std::sqrt(2.0) * std::sin(a / 2));
    EXPECT_NEAR(lhs, rhs, kAlg) << a;
  }
}

TEST(RotAbout, Examples) {
  const SpherePoint z(0, 0, 1);
  EXPECT_TRUE(rot_about(z, 0.0).matrix().isIdentity(kAlg));
  const Vec3 y = rot_about(z, kPi / 2) * Vec3(1, 0, 0);
  EXPECT_NEAR((y - Vec3(0, 1, 0)).norm(), 0.0, kAlg);
  const SpherePoint u = SpherePoint::normalized(Vec3(1, 2, 3));
  EXPECT_TRUE((rot_about(u, 0.7) * rot_about(u, -0.7)).matrix().isIdentity(kAlg));
}

TEST(RotAbout, CompositionDriftStaysSmall) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    Rotation3 r = Rotation3::identity();
    for (int k = 0; k < 3; ++k) r = r * rot_about(SpherePoint(random_unit(rng)), angle(rng));
    const Rotation3 clean = Rotation3::reorthonormalized(r.matrix());
    EXPECT_NEAR(clean.matrix().determinant(), 1.0, kAlg);
    EXPECT_LT(clean.orthonormality_residual(), kAlg);
  }
}

TEST(AxisAngle, Examples) {
  EXPECT_TRUE(axis_angle(Rotation3::identity()).near_identity);
  const SpherePoint u = SpherePoint::normalized(Vec3(-1, 0.5, 2));
  const AxisAngle aa = axis_angle(rot_about(u, 1.0));
  EXPECT_FALSE(aa.near_identity);
  EXPECT_NEAR(aa.angle, 1.0, kAlg);
  EXPECT_NEAR((aa.axis.vec() - u.vec()).norm(), 0.0, kAlg);
}

TEST(AxisAngle, RoundTripRandom) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(1e-6, kPi - 1e-6);
  for (int i = 0; i < 10000; ++i) {
    const Rotation3 r = rot_about(SpherePoint(random_unit(rng)), angle(rng));
    const AxisAngle aa = axis_angle(r);
    const Rotation3 back = rot_about(aa.axis, aa.signed_angle());
    ASSERT_TRUE((back.matrix() - r.matrix()).cwiseAbs().maxCoeff() < 1e-10) << i;
    ASSERT_GE(aa.angle, 0.0);
    ASSERT_LE(aa.angle, kPi);
  }
}

TEST(RotationAngleAbout, FullTurnRange) {
  const SpherePoint z(0, 0, 1);
  EXPECT_NEAR(rotation_angle_about(rot_about(z, 4.0), z.vec()), 4.0, kAlg);
  EXPECT_NEAR(rotation_angle_about(rot_about(z, 4.0), -z.vec()), kTwoPi - 4.0, kAlg);
}

TEST(PoleEdgeCrossing, SymmetricArc) {
  const double eps = 0.1;
  const GreatArc e(SpherePoint::normalized(Vec3(1, 0, eps)), SpherePoint::normalized(Vec3(1, 0, -eps)));
  const auto c = pole_edge_crossing(SpherePoint(0, 0, 1), e);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(c->t, 0.5, kAlg);
  EXPECT_NEAR((c->point - Vec3(1, 0, 0)).norm(), 0.0, kAlg);
}

TEST(PoleEdgeCrossing, NorthernArcIsAbsent) {
  const GreatArc e(SpherePoint::normalized(Vec3(1, 0, 0.5)), SpherePoint::normalized(Vec3(0, 1, 0.2)));
  EXPECT_FALSE(pole_edge_crossing(SpherePoint(0, 0, 1), e).has_value());
}

TEST(PoleEdgeCrossing, AgreesWithBisection) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 10000) {
    const SpherePoint pole(random_unit(rng));
    const Vec3 a = random_unit(rng), b = random_unit(rng);
    if ((a + b).norm() < 1e-3 || (a - b).norm() < 1e-3) continue;
    const GreatArc e{SpherePoint(a), SpherePoint(b)};
    const auto c = pole_edge_crossing(pole, e);
    const double sa = pole.vec().dot(a), sb = pole.vec().dot(b);
    if (sa * sb >= -1e-14) {
      ASSERT_FALSE(c.has_value());
      continue;
    }
    ASSERT_TRUE(c.has_value());
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double s = pole.vec().dot(e.point_at(mid));
      ((s > 0) == (sa > 0) ? lo : hi) = mid;
    }
    ASSERT_NEAR(c->t, 0.5 * (lo + hi), 1e-9) << checked;
    ++checked;
  }
}

}  // namespace
}  // namespace sphgeo
