#include "bvlab/disorder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bvlab/quadrature.hpp"

namespace bvlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
// Full-sphere root mean squared geodesic angle, sqrt((pi^2 - 4)/2) ~ 1.7131.
const double kFullSphereSigma = std::sqrt((M_PI * M_PI - 4.0) / 2.0);
constexpr double kCalibrationTol = 1e-4;
constexpr int kCalibrationMaxIter = 200;
constexpr double kStrengthRelTol = 1e-9;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// World-frame angles of a pole-frame point given (cos(theta_p), phi_p).
// Shares the rotation convention with rotate_pole_to_x: world = (z, y, -x).
BlochAngles pole_draw_to_world(double cos_theta_p, double phi_p) {
  const double sin_theta_p = std::sqrt(std::max(0.0, 1.0 - cos_theta_p * cos_theta_p));
  const UnitVector3 pole{sin_theta_p * std::cos(phi_p),
                         sin_theta_p * std::sin(phi_p), cos_theta_p};
  return from_cartesian(rotate_pole_to_x(pole));
}

// int_0^T sin(t) dt.
double cap_mass(double cap_angle) { return 1.0 - std::cos(cap_angle); }

// int_0^T t^2 sin(t) dt.
double cap_second_moment(double cap_angle) {
  const double t = cap_angle;
  return -t * t * std::cos(t) + 2.0 * t * std::sin(t) + 2.0 * std::cos(t) - 2.0;
}

double uniform_cap_sigma_sq(double d) {
  if (d <= 0.0) return 0.0;
  if (d < 1e-2) {
    // Series; the closed form cancels to O(d^4) out of O(d^2) terms.
    return 0.5 * d * d * (1.0 - d * d / 36.0);
  }
  return cap_second_moment(d) / cap_mass(d);
}

// theta^2-weighted von Mises-Fisher density in theta, normalized:
// theta^2 * kappa * exp(kappa (cos theta - 1)) / (1 - e^{-2 kappa}) * sin(theta).
double vmf_sigma_sq(double kappa) {
  if (kappa <= 0.0) return kFullSphereSigma * kFullSphereSigma;
  const double norm = kappa / -std::expm1(-2.0 * kappa);
  auto integrand = [&](double theta) {
    const double shifted = kappa * (std::cos(theta) - 1.0);
    return theta * theta * norm * std::exp(shifted) * std::sin(theta);
  };
  const double scale = std::min(M_PI, 12.0 / std::sqrt(kappa));
  const double pts[] = {0.0, scale, std::max(scale, M_PI * 0.5), M_PI};
  return integrate_split(integrand, pts, 4, kStrengthRelTol);
}

double cauchy_sigma_sq(double rho) {
  if (rho <= 0.0) return kFullSphereSigma * kFullSphereSigma;
  const double one_minus = 1.0 - rho;
  const double norm = (1.0 - rho * rho) * (1.0 - rho * rho) / 2.0;
  auto integrand = [&](double theta) {
    const double s = std::sin(0.5 * theta);
    const double t = one_minus * one_minus + 4.0 * rho * s * s;
    return norm * theta * theta * std::sin(theta) / (t * t);
  };
  const double peak = std::min(M_PI, std::max(1e-14, one_minus));
  const double pts[] = {0.0, peak, std::min(M_PI, 30.0 * peak), M_PI};
  return integrate_split(integrand, pts, 4, kStrengthRelTol);
}

// Largest pole-frame sin(theta) admitted by the squeeze ellipse along
// azimuth phi: sin(theta) <= 1 / sqrt(sin^2 phi / a^2 + cos^2 phi / b^2).
double squeeze_sin_limit(double a, double b, double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double inv_sq = (s * s) / (a * a) + (c * c) / (b * b);
  return std::min(1.0, 1.0 / std::sqrt(inv_sq));
}

double squeezed_sigma_sq(const SqueezeShape& shape) {
  const double a = std::min(1.0, shape.semi_axis_y());
  const double b = std::min(1.0, shape.semi_axis_z());
  auto theta_max = [&](double phi) {
    return std::asin(squeeze_sin_limit(a, b, phi));
  };
  // The ellipse is symmetric in both tangent axes; one quadrant suffices.
  auto mass = [&](double phi) { return cap_mass(theta_max(phi)); };
  auto second = [&](double phi) { return cap_second_moment(theta_max(phi)); };
  const double denom = integrate(mass, 0.0, M_PI / 2.0, kStrengthRelTol);
  const double num = integrate(second, 0.0, M_PI / 2.0, kStrengthRelTol);
  return num / denom;
}

double vmf_sigma_max() {
  // kappa -> 0 limit, evaluated once by quadrature at kappa = 1e-6.
  static const double value = std::sqrt(vmf_sigma_sq(1e-6));
  return value;
}

double squeezed_sigma_max(double area) {
  return std::sqrt(squeezed_sigma_sq(SqueezeShape{area, M_PI / area}));
}

StrengthReport make_report(double sigma, double sigma_max) {
  return {sigma, sigma_max, std::clamp(sigma / sigma_max, 0.0, 1.0)};
}

// Bisection on a monotone sigma_bar(param) map, to kCalibrationTol.
template <class F>
double bisect_strength(const F& sigma_bar_of, double lo, double hi,
                       double target, bool increasing) {
  for (int it = 0; it < kCalibrationMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = sigma_bar_of(mid);
    if (std::fabs(val - target) <= kCalibrationTol) return mid;
    const bool go_up = increasing ? (val < target) : (val > target);
    (go_up ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void require_target_in_unit(double target) {
  if (!(target >= 0.0 && target <= 1.0)) {
    throw UnreachableStrengthError(
        "sigma_bar target outside [0, 1]: " + std::to_string(target));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Model construction and validation
// ---------------------------------------------------------------------------

double SqueezeShape::semi_axis_y() const {
  return std::sqrt(area * axis_ratio / M_PI);
}

double SqueezeShape::semi_axis_z() const {
  return std::sqrt(area / (M_PI * axis_ratio));
}

QuantumDisorder QuantumDisorder::uniform_cap(double d) {
  QuantumDisorder m{QuantumKind::UniformCap, d, std::nullopt};
  m.validate();
  return m;
}

QuantumDisorder QuantumDisorder::spherical_gaussian(double kappa) {
  QuantumDisorder m{QuantumKind::SphericalGaussian, kappa, std::nullopt};
  m.validate();
  return m;
}

QuantumDisorder QuantumDisorder::spherical_cauchy(double rho) {
  QuantumDisorder m{QuantumKind::SphericalCauchy, rho, std::nullopt};
  m.validate();
  return m;
}

QuantumDisorder QuantumDisorder::discrete_circular(double d) {
  QuantumDisorder m{QuantumKind::DiscreteCircular, d, std::nullopt};
  m.validate();
  return m;
}

QuantumDisorder QuantumDisorder::squeezed(double area, double axis_ratio) {
  QuantumDisorder m{QuantumKind::Squeezed, 0.0, SqueezeShape{area, axis_ratio}};
  m.validate();
  return m;
}

void QuantumDisorder::validate() const {
  switch (kind) {
    case QuantumKind::UniformCap:
    case QuantumKind::DiscreteCircular:
      if (!(param >= 0.0 && param <= M_PI)) {
        throw DegenerateParamError("cap/circle angle d must lie in [0, pi]");
      }
      return;
    case QuantumKind::SphericalGaussian:
      if (!(param >= 0.0) || !std::isfinite(param)) {
        throw DegenerateParamError("concentration kappa must be >= 0");
      }
      return;
    case QuantumKind::SphericalCauchy:
      if (!(param >= 0.0 && param < 1.0)) {
        throw DegenerateParamError("concentration rho must lie in [0, 1)");
      }
      return;
    case QuantumKind::Squeezed: {
      if (!squeeze.has_value()) {
        throw DegenerateParamError("squeezed disorder needs (area, ratio)");
      }
      const double area = squeeze->area;
      const double r = squeeze->axis_ratio;
      if (!(area > 0.0 && area <= M_PI)) {
        throw DegenerateParamError("squeeze area D must lie in (0, pi]");
      }
      const double r_min = area / M_PI;
      const double r_max = M_PI / area;
      if (!(r >= r_min * (1.0 - 1e-9) && r <= r_max * (1.0 + 1e-9))) {
        throw DegenerateParamError("squeeze ratio r must lie in [D/pi, pi/D]");
      }
      return;
    }
  }
  throw DegenerateParamError("unknown quantum disorder kind");
}

ClassicalDisorder ClassicalDisorder::uniform(double v) {
  ClassicalDisorder m{ClassicalKind::Uniform, v};
  m.validate();
  return m;
}

ClassicalDisorder ClassicalDisorder::half_gaussian(double v) {
  ClassicalDisorder m{ClassicalKind::HalfGaussian, v};
  m.validate();
  return m;
}

ClassicalDisorder ClassicalDisorder::half_cauchy(double v) {
  ClassicalDisorder m{ClassicalKind::HalfCauchy, v};
  m.validate();
  return m;
}

ClassicalDisorder ClassicalDisorder::discrete(double v) {
  ClassicalDisorder m{ClassicalKind::Discrete, v};
  m.validate();
  return m;
}

void ClassicalDisorder::validate() const {
  switch (kind) {
    case ClassicalKind::Uniform:
    case ClassicalKind::Discrete:
      if (!(param >= 0.0 && param <= 1.0)) {
        throw DegenerateParamError("cutoff v must lie in [0, 1]");
      }
      return;
    case ClassicalKind::HalfGaussian:
    case ClassicalKind::HalfCauchy:
      if (!(param > 0.0) || !std::isfinite(param)) {
        throw DegenerateParamError("spread v must be positive");
      }
      return;
  }
  throw DegenerateParamError("unknown classical disorder kind");
}

// ---------------------------------------------------------------------------
// Pole-frame quantiles and CDFs
// ---------------------------------------------------------------------------

double uniform_cap_theta_quantile(double d, double a) {
  if (a <= 0.0) return 0.0;
  if (a >= 1.0) return d;
  return std::acos(clamp_unit(1.0 - a * (1.0 - std::cos(d))));
}

double spherical_gaussian_theta_quantile(double kappa, double a) {
  if (a <= 0.0) return 0.0;
  if (a >= 1.0) return M_PI;
  if (kappa == 0.0) return std::acos(clamp_unit(1.0 - 2.0 * a));
  // Stable rearrangement of cos(theta) = ln(e^k - 2 A sinh k)/k:
  // cos(theta) = 1 + log1p(A (e^{-2k} - 1))/k.
  const double cos_theta = 1.0 + std::log1p(a * std::expm1(-2.0 * kappa)) / kappa;
  return std::acos(clamp_unit(cos_theta));
}

double spherical_cauchy_theta_quantile(double rho, double a) {
  if (a <= 0.0) return 0.0;
  if (a >= 1.0) return M_PI;
  if (rho == 0.0) return std::acos(clamp_unit(1.0 - 2.0 * a));
  // (1+rho)^2 - 4 rho A rewritten as (1-rho)^2 + 4 rho (1-A), which does not
  // cancel as A -> 1.
  const double one_minus = 1.0 - rho;
  const double t = one_minus * one_minus + 4.0 * rho * (1.0 - a);
  const double one_minus_sq = (1.0 - rho * rho) * (1.0 - rho * rho);
  const double cos_theta = (1.0 + rho * rho - one_minus_sq / t) / (2.0 * rho);
  return std::acos(clamp_unit(cos_theta));
}

double uniform_cap_theta_cdf(double d, double theta) {
  if (theta <= 0.0) return 0.0;
  if (d <= 0.0 || theta >= d) return 1.0;
  return std::clamp((1.0 - std::cos(theta)) / (1.0 - std::cos(d)), 0.0, 1.0);
}

double spherical_gaussian_theta_cdf(double kappa, double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= M_PI) return 1.0;
  if (kappa == 0.0) return 0.5 * (1.0 - std::cos(theta));
  const double num = std::expm1(kappa * (std::cos(theta) - 1.0));
  const double den = std::expm1(-2.0 * kappa);
  return std::clamp(num / den, 0.0, 1.0);
}

double spherical_cauchy_theta_cdf(double rho, double theta) {
  if (theta <= 0.0) return 0.0;
  if (theta >= M_PI) return 1.0;
  if (rho == 0.0) return 0.5 * (1.0 - std::cos(theta));
  const double s = std::sin(0.5 * theta);
  const double one_minus = 1.0 - rho;
  const double one_plus = 1.0 + rho;
  const double t = one_minus * one_minus + 4.0 * rho * s * s;
  return std::clamp(one_plus * one_plus * s * s / t, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

BlochAngles sample_quantum(const QuantumDisorder& model, RandomStream& rng) {
  model.validate();
  switch (model.kind) {
    case QuantumKind::UniformCap: {
      const double cos_t = 1.0 - rng.uniform() * (1.0 - std::cos(model.param));
      return pole_draw_to_world(clamp_unit(cos_t), rng.uniform(0.0, kTwoPi));
    }
    case QuantumKind::SphericalGaussian: {
      const double kappa = model.param;
      const double a = rng.uniform();
      double cos_t;
      if (kappa == 0.0) {
        // Exact full-sphere uniform limit of the family.
        cos_t = 1.0 - 2.0 * a;
      } else {
        cos_t = 1.0 + std::log1p(a * std::expm1(-2.0 * kappa)) / kappa;
      }
      return pole_draw_to_world(clamp_unit(cos_t), rng.uniform(0.0, kTwoPi));
    }
    case QuantumKind::SphericalCauchy: {
      const double rho = model.param;
      const double a = rng.uniform();
      double cos_t;
      if (rho == 0.0) {
        cos_t = 1.0 - 2.0 * a;
      } else {
        const double one_minus = 1.0 - rho;
        const double t = one_minus * one_minus + 4.0 * rho * (1.0 - a);
        const double one_minus_sq = (1.0 - rho * rho) * (1.0 - rho * rho);
        cos_t = (1.0 + rho * rho - one_minus_sq / t) / (2.0 * rho);
      }
      return pole_draw_to_world(clamp_unit(cos_t), rng.uniform(0.0, kTwoPi));
    }
    case QuantumKind::DiscreteCircular: {
      return pole_draw_to_world(std::cos(model.param),
                                rng.uniform(0.0, kTwoPi));
    }
    case QuantumKind::Squeezed: {
      const double a = std::min(1.0, model.squeeze->semi_axis_y());
      const double b = std::min(1.0, model.squeeze->semi_axis_z());
      const double sin_cap = std::min(1.0, std::max(a, b) * (1.0 + 1e-12));
      const double cos_cap = std::sqrt(std::max(0.0, 1.0 - sin_cap * sin_cap));
      for (int attempt = 0; attempt < 100000; ++attempt) {
        const double cos_t = 1.0 - rng.uniform() * (1.0 - cos_cap);
        const double phi = rng.uniform(0.0, kTwoPi);
        const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
        const double uy = sin_t * std::sin(phi);  // pole y -> world y (axis a)
        const double ux = sin_t * std::cos(phi);  // pole x -> world -z (axis b)
        if ((uy / a) * (uy / a) + (ux / b) * (ux / b) <= 1.0) {
          return pole_draw_to_world(cos_t, phi);
        }
      }
      throw RejectionStallError("squeezed sampler acceptance rate below 1e-4");
    }
  }
  throw DegenerateParamError("unknown quantum disorder kind");
}

double sample_classical(const ClassicalDisorder& model, RandomStream& rng) {
  model.validate();
  switch (model.kind) {
    case ClassicalKind::Uniform:
      return model.param * rng.uniform();
    case ClassicalKind::HalfGaussian: {
      const double v = model.param;
      const double edge = std::erf(1.0 / (std::sqrt(2.0) * v));
      const double p = std::sqrt(2.0) * v * erf_inv(rng.uniform() * edge);
      return std::clamp(p, 0.0, 1.0);
    }
    case ClassicalKind::HalfCauchy: {
      const double v = model.param;
      const double p = v * std::tan(rng.uniform() * std::atan(1.0 / v));
      return std::clamp(p, 0.0, 1.0);
    }
    case ClassicalKind::Discrete:
      return model.param;
  }
  throw DegenerateParamError("unknown classical disorder kind");
}

// ---------------------------------------------------------------------------
// Strengths
// ---------------------------------------------------------------------------

StrengthReport quantum_strength(const QuantumDisorder& model) {
  model.validate();
  switch (model.kind) {
    case QuantumKind::UniformCap:
      return make_report(std::sqrt(uniform_cap_sigma_sq(model.param)),
                         kFullSphereSigma);
    case QuantumKind::SphericalGaussian:
      return make_report(std::sqrt(vmf_sigma_sq(model.param)), vmf_sigma_max());
    case QuantumKind::SphericalCauchy:
      return make_report(std::sqrt(cauchy_sigma_sq(model.param)),
                         kFullSphereSigma);
    case QuantumKind::DiscreteCircular:
      return make_report(model.param, M_PI);
    case QuantumKind::Squeezed:
      return make_report(std::sqrt(squeezed_sigma_sq(*model.squeeze)),
                         squeezed_sigma_max(model.squeeze->area));
  }
  throw DegenerateParamError("unknown quantum disorder kind");
}

QuantumDisorder quantum_param_for_strength(QuantumKind kind,
                                           double sigma_bar_target,
                                           std::optional<double> squeeze_area,
                                           SqueezeBranch branch) {
  require_target_in_unit(sigma_bar_target);
  const double t = sigma_bar_target;
  switch (kind) {
    case QuantumKind::UniformCap: {
      if (t == 0.0) return QuantumDisorder::uniform_cap(0.0);
      if (t == 1.0) return QuantumDisorder::uniform_cap(M_PI);
      auto bar = [](double d) {
        return std::sqrt(uniform_cap_sigma_sq(d)) / kFullSphereSigma;
      };
      return QuantumDisorder::uniform_cap(
          bisect_strength(bar, 0.0, M_PI, t, /*increasing=*/true));
    }
    case QuantumKind::DiscreteCircular:
      return QuantumDisorder::discrete_circular(t * M_PI);
    case QuantumKind::SphericalGaussian: {
      if (t == 1.0) return QuantumDisorder::spherical_gaussian(0.0);
      auto bar = [](double kappa) {
        return std::sqrt(vmf_sigma_sq(kappa)) / vmf_sigma_max();
      };
      double hi = 1.0;
      while (bar(hi) > t && hi < 1e13) hi *= 8.0;
      return QuantumDisorder::spherical_gaussian(
          bisect_strength(bar, 0.0, hi, t, /*increasing=*/false));
    }
    case QuantumKind::SphericalCauchy: {
      if (t == 1.0) return QuantumDisorder::spherical_cauchy(0.0);
      auto bar = [](double rho) {
        return std::sqrt(cauchy_sigma_sq(rho)) / kFullSphereSigma;
      };
      return QuantumDisorder::spherical_cauchy(
          bisect_strength(bar, 0.0, 1.0 - 1e-12, t, /*increasing=*/false));
    }
    case QuantumKind::Squeezed: {
      if (!squeeze_area.has_value()) {
        throw DegenerateParamError(
            "squeezed calibration requires the squeeze area D");
      }
      const double area = *squeeze_area;
      const double sigma_max = squeezed_sigma_max(area);
      auto bar = [&](double r) {
        return std::sqrt(squeezed_sigma_sq(SqueezeShape{area, r})) / sigma_max;
      };
      const double bar_at_one = bar(1.0);
      if (t < bar_at_one - kCalibrationTol) {
        throw UnreachableStrengthError(
            "sigma_bar below the squeezed family's minimum at this D");
      }
      const bool r_up = (branch == SqueezeBranch::RAtLeastOne);
      const double r_edge = r_up ? M_PI / area : area / M_PI;
      if (t >= 1.0) return QuantumDisorder::squeezed(area, r_edge);
      if (t <= bar_at_one) return QuantumDisorder::squeezed(area, 1.0);
      const double lo = r_up ? 1.0 : r_edge;
      const double hi = r_up ? r_edge : 1.0;
      return QuantumDisorder::squeezed(
          area, bisect_strength(bar, lo, hi, t, /*increasing=*/r_up));
    }
  }
  throw DegenerateParamError("unknown quantum disorder kind");
}

ClassicalMoments classical_mean_and_strength(const ClassicalDisorder& model) {
  model.validate();
  const double v = model.param;
  switch (model.kind) {
    case ClassicalKind::Uniform:
      return {0.5 * v, make_report(v / std::sqrt(3.0), 1.0 / std::sqrt(3.0))};
    case ClassicalKind::HalfGaussian: {
      const double x_sq = 1.0 / (2.0 * v * v);  // (1/(sqrt(2) v))^2
      const double norm = std::sqrt(2.0 / (M_PI * v * v)) /
                          std::erf(1.0 / (std::sqrt(2.0) * v));
      const double mean = norm * v * v * -std::expm1(-x_sq);
      double sigma_sq;
      if (v >= 100.0) {
        // 1 - N exp(-x^2) cancels; series in x^2 = 1/(2 v^2).
        const double num =
            x_sq * (2.0 / 3.0 - x_sq * (2.0 / 5.0 - x_sq / 7.0));
        const double den =
            1.0 - x_sq / 3.0 + x_sq * x_sq / 10.0 - x_sq * x_sq * x_sq / 42.0;
        sigma_sq = v * v * num / den;
      } else {
        sigma_sq = v * v * (1.0 - norm * std::exp(-x_sq));
      }
      return {mean, make_report(std::sqrt(sigma_sq), 1.0 / std::sqrt(3.0))};
    }
    case ClassicalKind::HalfCauchy: {
      const double atan_inv = std::atan(1.0 / v);
      const double norm = 1.0 / (v * atan_inv);
      const double mean = 0.5 * norm * v * v * std::log1p(1.0 / (v * v));
      double tail;  // 1 - v atan(1/v)
      if (v >= 100.0) {
        const double w_sq = 1.0 / (v * v);
        tail = w_sq * (1.0 / 3.0 - w_sq * (1.0 / 5.0 - w_sq / 7.0));
      } else {
        tail = 1.0 - v * atan_inv;
      }
      const double sigma = v * std::sqrt(norm * tail);
      return {mean, make_report(sigma, 1.0 / std::sqrt(3.0))};
    }
    case ClassicalKind::Discrete:
      return {v, make_report(v, 1.0)};
  }
  throw DegenerateParamError("unknown classical disorder kind");
}

ClassicalDisorder classical_param_for_strength(ClassicalKind kind,
                                               double sigma_bar_target) {
  require_target_in_unit(sigma_bar_target);
  const double t = sigma_bar_target;
  switch (kind) {
    case ClassicalKind::Uniform:
      return ClassicalDisorder::uniform(t);  // sigma_bar = v exactly
    case ClassicalKind::Discrete:
      return ClassicalDisorder::discrete(t);
    case ClassicalKind::HalfGaussian:
    case ClassicalKind::HalfCauchy: {
      auto make = [&](double v) {
        return kind == ClassicalKind::HalfGaussian
                   ? ClassicalDisorder::half_gaussian(v)
                   : ClassicalDisorder::half_cauchy(v);
      };
      auto bar = [&](double v) {
        return classical_mean_and_strength(make(v)).strength.sigma_bar;
      };
      if (t == 0.0) return make(1e-9);
      double hi = 1.0;
      while (bar(hi) < t && hi < 1e6) hi *= 2.0;
      return make(bisect_strength(bar, 1e-12, hi, t, /*increasing=*/true));
    }
  }
  throw DegenerateParamError("unknown classical disorder kind");
}

double erf_inv(double y) {
  if (!(y > -1.0 && y < 1.0)) {
    if (y == 1.0 || y == -1.0) return y * HUGE_VAL;
    throw DegenerateParamError("erf_inv argument outside (-1, 1)");
  }
  if (y == 0.0) return 0.0;
  // Winitzki's approximation as the seed.
  const double a = 0.147;
  const double ln_term = std::log1p(-y * y);
  const double lead = 2.0 / (M_PI * a) + 0.5 * ln_term;
  double x = std::copysign(
      std::sqrt(std::sqrt(lead * lead - ln_term / a) - lead), y);
  // Two Newton steps on erf(x) - y bring this to full double precision. The
  // step clamp only matters within ~1e-15 of the endpoints, where erf itself
  // saturates and the correction becomes noise.
  const double half_sqrt_pi = 0.5 * std::sqrt(M_PI);
  for (int i = 0; i < 2; ++i) {
    const double step = (std::erf(x) - y) * half_sqrt_pi * std::exp(x * x);
    x -= std::clamp(step, -0.25, 0.25);
  }
  return x;
}

}  // namespace bvlab
