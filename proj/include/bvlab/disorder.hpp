#pragma once

#include <optional>

#include "bvlab/bloch.hpp"
#include "bvlab/errors.hpp"
#include "bvlab/random.hpp"

namespace bvlab {

// ---------------------------------------------------------------------------
// Quantum (Bloch-sphere) disorder families. Every family has its mean (or
// mode) along the +x axis, the image of |0> under a noiseless Hadamard.
// Sampling happens in the "pole frame" (mean at the north pole) and is then
// mapped to the world frame by rotate_pole_to_x.
// ---------------------------------------------------------------------------

enum class QuantumKind {
  UniformCap,         // Haar-uniform on a spherical cap of half-angle d
  SphericalGaussian,  // von Mises-Fisher with concentration kappa
  SphericalCauchy,    // spherical Cauchy-Lorentz with concentration rho
  DiscreteCircular,   // fixed geodesic angle d, azimuth uniform
  Squeezed            // uniform on the sphere inside an elliptical cylinder
};

// Squeeze ellipse: semi-axis a = sqrt(area*ratio/pi) parallel to world y,
// semi-axis b = sqrt(area/(pi*ratio)) parallel to world z; area = pi*a*b,
// ratio = a/b.
struct SqueezeShape {
  double area = 0.0;
  double axis_ratio = 1.0;

  double semi_axis_y() const;  // a
  double semi_axis_z() const;  // b
};

struct QuantumDisorder {
  QuantumKind kind = QuantumKind::UniformCap;
  double param = 0.0;  // d (UniformCap/DiscreteCircular), kappa, or rho
  std::optional<SqueezeShape> squeeze;

  static QuantumDisorder uniform_cap(double d);
  static QuantumDisorder spherical_gaussian(double kappa);
  static QuantumDisorder spherical_cauchy(double rho);
  static QuantumDisorder discrete_circular(double d);
  static QuantumDisorder squeezed(double area, double axis_ratio);

  // Throws DegenerateParamError when a parameter is out of range.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Classical disorder: distribution of the "no-flip" probability p in [0, 1]
// of a noisy bit-flip gate. The noiseless value is p = 0.
// ---------------------------------------------------------------------------

enum class ClassicalKind { Uniform, HalfGaussian, HalfCauchy, Discrete };

struct ClassicalDisorder {
  ClassicalKind kind = ClassicalKind::Uniform;
  double param = 0.0;  // v: cutoff (Uniform/Discrete) or spread (half-*)

  static ClassicalDisorder uniform(double v);
  static ClassicalDisorder half_gaussian(double v);
  static ClassicalDisorder half_cauchy(double v);
  static ClassicalDisorder discrete(double v);

  void validate() const;
};

// Raw strength sigma, the family's maximal strength, and their ratio
// sigma_bar = sigma/sigma_max in [0, 1]. sigma is the root mean squared
// geodesic angle from the mean (quantum) or root mean squared p (classical).
struct StrengthReport {
  double sigma = 0.0;
  double sigma_max = 0.0;
  double sigma_bar = 0.0;
};

// Which side of r = 1 to invert when calibrating the squeezed family; the
// two branches carry (numerically) the same strength.
enum class SqueezeBranch { RAtLeastOne, RAtMostOne };

// One draw from the family, world frame, mean along (1, pi/2, 0).
// SphericalGaussian with kappa = 0 and SphericalCauchy with rho = 0 are the
// exact full-sphere uniform limits of their families and are sampled as such.
// Throws RejectionStallError if the squeezed sampler stops accepting.
BlochAngles sample_quantum(const QuantumDisorder& model, RandomStream& rng);

// Strength via the closed forms where the family has one, otherwise by
// quadrature of the theta^2-weighted pole-frame density (relative error
// 1e-8). Squeezed uses the rotation-invariant restatement: sigma^2 is the
// mean squared geodesic angle from the mean over the accepted region.
StrengthReport quantum_strength(const QuantumDisorder& model);

// Inverts sigma_bar(param) by bisection to 1e-4 in sigma_bar. For Squeezed,
// squeeze_area must be given and the stated branch of r is searched.
// Throws UnreachableStrengthError when the target is outside the family's
// attainable range.
QuantumDisorder quantum_param_for_strength(
    QuantumKind kind, double sigma_bar_target,
    std::optional<double> squeeze_area = std::nullopt,
    SqueezeBranch branch = SqueezeBranch::RAtLeastOne);

// One draw of the no-flip probability p in [0, 1].
double sample_classical(const ClassicalDisorder& model, RandomStream& rng);

struct ClassicalMoments {
  double mean = 0.0;  // m_X
  StrengthReport strength;
};

ClassicalMoments classical_mean_and_strength(const ClassicalDisorder& model);

ClassicalDisorder classical_param_for_strength(ClassicalKind kind,
                                               double sigma_bar_target);

// ---------------------------------------------------------------------------
// Pole-frame quantile and CDF maps of the axisymmetric families, exposed for
// distribution tests. The quantile maps pin their endpoints exactly:
// quantile(0) = 0 and quantile(1) = pi.
// ---------------------------------------------------------------------------

double uniform_cap_theta_quantile(double d, double a);
double spherical_gaussian_theta_quantile(double kappa, double a);
double spherical_cauchy_theta_quantile(double rho, double a);

double uniform_cap_theta_cdf(double d, double theta);
double spherical_gaussian_theta_cdf(double kappa, double theta);
double spherical_cauchy_theta_cdf(double rho, double theta);

// Inverse of the standard error function, |y| < 1. Accurate to ~1e-15 via a
// rational seed polished with two Newton steps on std::erf.
double erf_inv(double y);

}  // namespace bvlab
