#pragma once

#include "bvlab/errors.hpp"

namespace bvlab {

// Pure qubit state as zenith/azimuth angles on the Bloch sphere.
// theta in [0, pi]; phi stored half-open in [0, 2*pi), with phi = 0 at the
// poles where the azimuth is degenerate.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

struct UnitVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Normalizes (theta, phi) into the canonical ranges above. Inputs of exactly
// 2*pi in phi wrap to 0.
BlochAngles canonical_angles(double theta, double phi);

// (sin t cos p, sin t sin p, cos t).
UnitVector3 to_cartesian(const BlochAngles& a);

// Inverse of to_cartesian; renormalizes the input, throws ZeroVectorError if
// |v| < 1e-6. At the poles phi is canonicalized to 0.
BlochAngles from_cartesian(const UnitVector3& v);

// Rigid rotation about the y-axis by +pi/2, taking the north pole (0,0,1) to
// the +x axis. The full convention, needed by the squeezed (non-axisymmetric)
// disorder: pole-frame x maps to world -z, pole-frame y maps to world y.
// In coordinates: world = (z_p, y_p, -x_p).
UnitVector3 rotate_pole_to_x(const UnitVector3& p);
BlochAngles rotate_pole_to_x(const BlochAngles& a);

// Geodesic (great-circle) angle between two unit vectors, in [0, pi].
double geodesic_angle(const UnitVector3& p, const UnitVector3& q);

}  // namespace bvlab
