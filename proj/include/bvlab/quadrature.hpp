#pragma once

#include <cmath>
#include <utility>

namespace bvlab {

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
inline constexpr double kKronrodWeights[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
inline constexpr double kGaussWeights[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

template <class F>
std::pair<double, double> gauss_kronrod_15(const F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double f_mid = f(mid);
  double kronrod = kKronrodWeights[0] * f_mid;
  double gauss = kGaussWeights[0] * f_mid;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f_sum = f(mid - dx) + f(mid + dx);
    kronrod += kKronrodWeights[i] * f_sum;
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * f_sum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss)};
}

template <class F>
double integrate_recursive(const F& f, double a, double b, double tol,
                           double whole, double err, int depth) {
  if (err <= tol || depth <= 0 || b - a < 1e-14 * (std::fabs(a) + 1.0)) {
    return whole;
  }
  const double mid = 0.5 * (a + b);
  const auto [left, err_l] = gauss_kronrod_15(f, a, mid);
  const auto [right, err_r] = gauss_kronrod_15(f, mid, b);
  return integrate_recursive(f, a, mid, 0.5 * tol, left, err_l, depth - 1) +
         integrate_recursive(f, mid, b, 0.5 * tol, right, err_r, depth - 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The tolerance is
// relative to the first whole-interval estimate; abs_tol, when nonzero, sets
// a floor so that segments of a split domain that carry no mass are accepted
// immediately.
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, int max_depth = 48) {
  if (a == b) return 0.0;
  const auto [whole, err] = detail::gauss_kronrod_15(f, a, b);
  const double tol =
      std::max(rel_tol * std::max(std::fabs(whole), 1e-300), abs_tol) + 1e-305;
  return detail::integrate_recursive(f, a, b, tol, whole, err, max_depth);
}

// Integrates over [pts[0], pts[n-1]] split at the interior points. Useful
// when the integrand is sharply concentrated and the concentration scale is
// known, so the adaptive pass starts from informed segments.
template <class F>
double integrate_split(const F& f, const double* pts, int n_pts,
                       double rel_tol = 1e-10) {
  double rough = 0.0;
  for (int i = 0; i + 1 < n_pts; ++i) {
    rough += detail::gauss_kronrod_15(f, pts[i], pts[i + 1]).first;
  }
  const double abs_tol = rel_tol * std::fabs(rough) / std::max(1, n_pts - 1);
  double total = 0.0;
  for (int i = 0; i + 1 < n_pts; ++i) {
    total += integrate(f, pts[i], pts[i + 1], rel_tol, abs_tol);
  }
  return total;
}

}  // namespace bvlab
