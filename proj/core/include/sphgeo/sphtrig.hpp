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

#ifndef SPHGEO_SPHTRIG_HPP_
#define SPHGEO_SPHTRIG_HPP_

// Spherical trigonometry kernel: closed-form metric quantities of regular
// spherical triangles and squares, plus the unit-sphere primitives (points,
// rotations, great arcs) every other module builds on.  Everything here is a
// pure function of its arguments.

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace sphgeo {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Algebraic identities are checked against this; so is arccos clamping.
inline constexpr double kIdentityTol = 1e-12;
// Iterated geometric constructions (developments, crossings).
inline constexpr double kGeometryTol = 1e-9;

// Raised when a closed-form quantity is requested outside its domain, or
// when an arccos argument leaves [-1, 1] by more than kIdentityTol.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// arccos that clamps only rounding-size excursions past +-1.
double clamped_acos(double x);

// Planar angle of a facet, strictly inside (0, pi).
class PlanarAngle {
 public:
  explicit PlanarAngle(double radians);

  double radians() const { return radians_; }
  double half() const { return 0.5 * radians_; }

  friend bool operator==(const PlanarAngle&, const PlanarAngle&) = default;

 private:
  double radians_;
};

// A point on the unit sphere.  Construction checks the norm.
class SpherePoint {
 public:
  SpherePoint() : v_(0.0, 0.0, 1.0) {}
  SpherePoint(double x, double y, double z);
  explicit SpherePoint(const Vec3& v);

  // Rescales v onto the sphere; throws on a (near) zero vector.
  static SpherePoint normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }

  SpherePoint operator-() const { return SpherePoint(Vec3(-v_)); }

 private:
  Vec3 v_;
};

// Great-circle distance between two points.
double arc_distance(const Vec3& a, const Vec3& b);

// Orientation-preserving isometry of the unit sphere, stored as a 3x3
// orthonormal matrix with determinant +1.
class Rotation3 {
 public:
  Rotation3() : m_(Mat3::Identity()) {}
  // Validates orthonormality and determinant within kIdentityTol.
  explicit Rotation3(const Mat3& m);

  static Rotation3 identity() { return Rotation3(); }
  // Nearest rotation to m (polar decomposition); m must be close to SO(3).
  static Rotation3 reorthonormalized(const Mat3& m);
  // Unique rotation taking the ordered pair (from0, from1) onto (to0, to1).
  // Both pairs must subtend the same angle.
  static Rotation3 aligning(const Vec3& from0, const Vec3& from1,
                            const Vec3& to0, const Vec3& to1);

  const Mat3& matrix() const { return m_; }
  Rotation3 inverse() const;
  Rotation3 operator*(const Rotation3& rhs) const;
  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  SpherePoint operator*(const SpherePoint& p) const;

  // max(|R^T R - I|, |det R - 1|).
  double orthonormality_residual() const;

 private:
  struct Unchecked {};
  Rotation3(const Mat3& m, Unchecked) : m_(m) {}

  Mat3 m_;
};

// Proper minor great arc between two non-antipodal, distinct points.
class GreatArc {
 public:
  GreatArc(const SpherePoint& a, const SpherePoint& b);

  const SpherePoint& a() const { return a_; }
  const SpherePoint& b() const { return b_; }
  double length() const { return arc_distance(a_.vec(), b_.vec()); }
  // Point at arc-length fraction t from a.
  Vec3 point_at(double t) const;
  GreatArc reversed() const { return GreatArc(b_, a_); }

 private:
  SpherePoint a_;
  SpherePoint b_;
};

// ---------------------------------------------------------------------------
// Closed-form metric quantities.

// Side opposite the angle B, given the two enclosing sides a and c.
double cos_side(double a, double c, double angle_b);

// Side b from the mixed relation cos b sin A = cos a sin B cos C + sin C cos B.
double side_from_mixed(double a, double angle_a, double angle_b,
                       double angle_c);

// Interior angle opposite side `opposite` from the three sides.
double angle_from_sides(double opposite, double side1, double side2);

// Edge of the regular spherical triangle with interior angle alpha,
// alpha in (pi/3, 2pi/3].
double tetra_edge(PlanarAngle alpha);
// Edge of the regular spherical square, alpha in (pi/2, 2pi/3].
double cube_edge(PlanarAngle alpha);
// Diagonal of the regular spherical square, alpha in (pi/2, 2pi/3].
double cube_diagonal(PlanarAngle alpha);
// Arc between midpoints of opposite sides of the square (h).  Accepts the
// closed interval [pi/2, 2pi/3]; h(pi/2) = 0 is the degenerate square.
double square_midline(PlanarAngle alpha);
// Center-to-vertex distance of the regular spherical n-gon, n in {3, 4}.
double circumradius(int sides, PlanarAngle alpha);

// ---------------------------------------------------------------------------
// Rotations and great circles.

// Rodrigues rotation by `angle` (right-handed) about the unit axis.
Rotation3 rot_about(const SpherePoint& axis, double angle);

struct AxisAngle {
  SpherePoint axis;
  // In [0, pi].  The axis is oriented so this is the positive rotation.
  double angle = 0.0;
  bool near_identity = false;

  // The same rotation expressed as a signed angle in (-pi, pi] about +axis.
  double signed_angle() const { return angle; }
};

inline constexpr double kNearIdentityAngle = 1e-9;

AxisAngle axis_angle(const Rotation3& r);

// Right-handed rotation angle of r about the unit vector u, in [0, 2pi).
// Meaningful when u is (anti)parallel to the axis of r.
double rotation_angle_about(const Rotation3& r, const Vec3& u);

// Deterministic tangent basis at the pole: e1 from Gram-Schmidt against the
// coordinate axis least aligned with the pole, e2 = pole x e1.
struct PoleFrame {
  Vec3 pole;
  Vec3 e1;
  Vec3 e2;

  explicit PoleFrame(const Vec3& pole);
  // Azimuth of x around the pole, in (-pi, pi].  Increasing azimuth moves in
  // direction pole x x.
  double azimuth(const Vec3& x) const;
};

struct EdgeCrossing {
  double t = 0.0;        // arc-length fraction along the arc, from a
  double azimuth = 0.0;  // in the pole's PoleFrame
  Vec3 point;
};

// Strict interior crossing of the pole's equator with the arc; absent when
// both endpoints lie (within 1e-14) on the same side.
std::optional<EdgeCrossing> pole_edge_crossing(const SpherePoint& pole,
                                               const GreatArc& arc);

}  // namespace sphgeo

#endif  // SPHGEO_SPHTRIG_HPP_
