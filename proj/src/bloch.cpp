#include "bvlab/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace bvlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

BlochAngles canonical_angles(double theta, double phi) {
  theta = std::clamp(theta, 0.0, M_PI);
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  if (theta == 0.0 || theta == M_PI) phi = 0.0;
  return {theta, phi};
}

UnitVector3 to_cartesian(const BlochAngles& a) {
  const double st = std::sin(a.theta);
  return {st * std::cos(a.phi), st * std::sin(a.phi), std::cos(a.theta)};
}

BlochAngles from_cartesian(const UnitVector3& v) {
  const double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (norm < 1e-6) {
    throw ZeroVectorError("from_cartesian: vector norm below 1e-6");
  }
  const double x = v.x / norm;
  const double y = v.y / norm;
  const double z = v.z / norm;
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  if (x == 0.0 && y == 0.0) {
    return {z >= 0.0 ? 0.0 : M_PI, 0.0};
  }
  double phi = std::atan2(y, x);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return canonical_angles(theta, phi);
}

UnitVector3 rotate_pole_to_x(const UnitVector3& p) {
  return {p.z, p.y, -p.x};
}

BlochAngles rotate_pole_to_x(const BlochAngles& a) {
  return from_cartesian(rotate_pole_to_x(to_cartesian(a)));
}

double geodesic_angle(const UnitVector3& p, const UnitVector3& q) {
  const double dot = p.x * q.x + p.y * q.y + p.z * q.z;
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace bvlab
