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

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

namespace sphgeo {

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  return os.str();
}

void require_open(double alpha, double lo, double hi, bool hi_closed,
                  const char* name) {
  const bool ok = alpha > lo && (hi_closed ? alpha <= hi : alpha < hi);
  if (!ok) {
    std::ostringstream os;
    os.precision(17);
    os << name << ": planar angle " << alpha << " outside (" << lo << ", "
       << hi << (hi_closed ? "]" : ")");
    throw DomainError(os.str());
  }
}

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

double clamped_acos(double x) {
  if (!std::isfinite(x)) throw DomainError(describe("arccos of non-finite", x));
  if (x > 1.0) {
    if (x - 1.0 > kIdentityTol) throw DomainError(describe("arccos argument above 1", x));
    return 0.0;
  }
  if (x < -1.0) {
    if (-1.0 - x > kIdentityTol) throw DomainError(describe("arccos argument below -1", x));
    return kPi;
  }
  return std::acos(x);
}

PlanarAngle::PlanarAngle(double radians) : radians_(radians) {
  if (!std::isfinite(radians) || radians <= 0.0 || radians >= kPi) {
    throw DomainError(describe("planar angle must lie in (0, pi)", radians));
  }
}

SpherePoint::SpherePoint(double x, double y, double z)
    : SpherePoint(Vec3(x, y, z)) {}

SpherePoint::SpherePoint(const Vec3& v) : v_(v) {
  if (!v.allFinite() || std::abs(v.squaredNorm() - 1.0) > kIdentityTol) {
    throw DomainError(describe("sphere point is not unit, |v|^2", v.squaredNorm()));
  }
}

SpherePoint SpherePoint::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return SpherePoint(Vec3(v / n));
}

double arc_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// ---------------------------------------------------------------------------

Rotation3::Rotation3(const Mat3& m) : m_(m) {
  if (orthonormality_residual() > kIdentityTol) {
    throw DomainError(describe("matrix is not a rotation, residual",
                               orthonormality_residual()));
  }
}

Rotation3 Rotation3::reorthonormalized(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  const Mat3& v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) u.col(2) *= -1.0;
  return Rotation3(Mat3(u * v.transpose()));
}

Rotation3 Rotation3::aligning(const Vec3& from0, const Vec3& from1,
                              const Vec3& to0, const Vec3& to1) {
  auto frame = [](const Vec3& p, const Vec3& q) {
    const Vec3 e0 = p.normalized();
    const Vec3 e1 = (q - q.dot(e0) * e0).normalized();
    Mat3 f;
    f.col(0) = e0;
    f.col(1) = e1;
    f.col(2) = e0.cross(e1);
    return f;
  };
  return Rotation3(frame(to0, to1) * frame(from0, from1).transpose(),
                   Unchecked{});
}

Rotation3 Rotation3::inverse() const {
  return Rotation3(Mat3(m_.transpose()), Unchecked{});
}

Rotation3 Rotation3::operator*(const Rotation3& rhs) const {
  return Rotation3(Mat3(m_ * rhs.m_), Unchecked{});
}

SpherePoint Rotation3::operator*(const SpherePoint& p) const {
  return SpherePoint::normalized(m_ * p.vec());
}

double Rotation3::orthonormality_residual() const {
  const double ortho = (m_.transpose() * m_ - Mat3::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(m_.determinant() - 1.0));
}

// ---------------------------------------------------------------------------

GreatArc::GreatArc(const SpherePoint& a, const SpherePoint& b) : a_(a), b_(b) {
  if (a.vec().cross(b.vec()).norm() <= kIdentityTol) {
    throw DomainError("great arc endpoints coincide or are antipodal");
  }
}

Vec3 GreatArc::point_at(double t) const {
  const double total = length();
  const Vec3 n = a_.vec().cross(b_.vec()).normalized();
  const Vec3 tangent = n.cross(a_.vec());
  return std::cos(t * total) * a_.vec() + std::sin(t * total) * tangent;
}

// ---------------------------------------------------------------------------

double cos_side(double a, double c, double angle_b) {
  return clamped_acos(std::cos(a) * std::cos(c) +
                      std::sin(a) * std::sin(c) * std::cos(angle_b));
}

double side_from_mixed(double a, double angle_a, double angle_b,
                       double angle_c) {
  const double sin_a = std::sin(angle_a);
  if (sin_a <= kIdentityTol) {
    throw DomainError(describe("side_from_mixed: sin A too small", sin_a));
  }
  const double q = (std::cos(a) * std::sin(angle_b) * std::cos(angle_c) +
                    std::sin(angle_c) * std::cos(angle_b)) /
                   sin_a;
  return clamped_acos(q);
}

double angle_from_sides(double opposite, double side1, double side2) {
  const double denom = std::sin(side1) * std::sin(side2);
  if (std::abs(denom) <= kIdentityTol) {
    throw DomainError("angle_from_sides: degenerate adjacent side");
  }
  return clamped_acos((std::cos(opposite) - std::cos(side1) * std::cos(side2)) /
                      denom);
}

double tetra_edge(PlanarAngle alpha) {
  require_open(alpha.radians(), kPi / 3.0, 2.0 * kPi / 3.0, true, "tetra_edge");
  const double c = std::cos(alpha.radians());
  return clamped_acos(c / (1.0 - c));
}

double cube_edge(PlanarAngle alpha) {
  require_open(alpha.radians(), kPi / 2.0, 2.0 * kPi / 3.0, true, "cube_edge");
  const double ct = cot(alpha.half());
  return clamped_acos(ct * ct);
}

double cube_diagonal(PlanarAngle alpha) {
  require_open(alpha.radians(), kPi / 2.0, 2.0 * kPi / 3.0, true,
               "cube_diagonal");
  const double ch = std::cos(alpha.half());
  const double sh = std::sin(alpha.half());
  const double ca = std::cos(alpha.radians());
  return clamped_acos((std::pow(ch, 4) - ca * ca) / std::pow(sh, 4));
}

double square_midline(PlanarAngle alpha) {
  const double a = alpha.radians();
  if (a < kPi / 2.0 || a > 2.0 * kPi / 3.0) {
    throw DomainError(describe("square_midline: planar angle outside [pi/2, 2pi/3]", a));
  }
  return clamped_acos(std::sin(1.5 * a) / std::sin(0.5 * a));
}

double circumradius(int sides, PlanarAngle alpha) {
  if (sides != 3 && sides != 4) {
    throw DomainError("circumradius: only triangles and squares are supported");
  }
  const double interior_min = (sides - 2) * kPi / sides;
  if (alpha.radians() <= interior_min) {
    throw DomainError(describe("circumradius: planar angle too small for a spherical polygon",
                               alpha.radians()));
  }
  return clamped_acos(cot(alpha.half()) * cot(kPi / sides));
}

// ---------------------------------------------------------------------------

Rotation3 rot_about(const SpherePoint& axis, double angle) {
  const Vec3& u = axis.vec();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat3 k;
  k << 0.0, -u.z(), u.y(),
       u.z(), 0.0, -u.x(),
       -u.y(), u.x(), 0.0;
  const Mat3 m = c * Mat3::Identity() + s * k + (1.0 - c) * (u * u.transpose());
  return Rotation3::reorthonormalized(m);
}

AxisAngle axis_angle(const Rotation3& r) {
  Eigen::Quaterniond q(r.matrix());
  q.normalize();
  if (q.w() < 0.0) q.coeffs() *= -1.0;
  const double im = q.vec().norm();
  AxisAngle out;
  out.angle = 2.0 * std::atan2(im, q.w());
  if (im > 1e-300) {
    out.axis = SpherePoint::normalized(q.vec());
  } else {
    out.axis = SpherePoint(0.0, 0.0, 1.0);
  }
  out.near_identity = out.angle < kNearIdentityAngle;
  return out;
}

double rotation_angle_about(const Rotation3& r, const Vec3& u) {
  const PoleFrame frame(u.normalized());
  const Vec3 w = frame.e1;
  const Vec3 rw = r * w;
  double ang = std::atan2(frame.pole.dot(w.cross(rw)), w.dot(rw));
  if (ang < 0.0) ang += kTwoPi;
  if (ang >= kTwoPi) ang -= kTwoPi;
  return ang;
}

PoleFrame::PoleFrame(const Vec3& p) : pole(p) {
  int least = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(p[i]) < std::abs(p[least])) least = i;
  }
  Vec3 axis = Vec3::Zero();
  axis[least] = 1.0;
  e1 = (axis - axis.dot(p) * p).normalized();
  e2 = p.cross(e1);
}

double PoleFrame::azimuth(const Vec3& x) const {
  return std::atan2(x.dot(e2), x.dot(e1));
}

std::optional<EdgeCrossing> pole_edge_crossing(const SpherePoint& pole,
                                               const GreatArc& arc) {
  const Vec3& u = pole.vec();
  const Vec3& a = arc.a().vec();
  const Vec3& b = arc.b().vec();
  const double sa = u.dot(a);
  const double sb = u.dot(b);
  if (sa * sb >= -1e-14) return std::nullopt;
  const Vec3 x = (std::abs(sa) * b + std::abs(sb) * a).normalized();
  EdgeCrossing out;
  out.point = x;
  out.t = arc_distance(a, x) / arc_distance(a, b);
  out.azimuth = PoleFrame(u).azimuth(x);
  return out;
}

}  // namespace sphgeo
