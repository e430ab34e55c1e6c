#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "phasekit/errors.hpp"

// Adaptive Simpson quadrature with mandatory splits at supplied breakpoints
// (kink locations), absolute tolerance, and a depth cap.  Each accepted
// interval contributes S2 + (S2 - S1) / 15 (one Richardson step).

namespace phasekit {

inline constexpr double kQuadratureTol = 1e-9;
inline constexpr int kQuadratureMaxDepth = 40;

namespace detail {

template <class F>
double simpson_rec(F&& f, double a, double fa, double b, double fb, double m, double fm,
                   double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) throw QuadratureError("quadrature failed");
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <class F>
double simpson_segment(F&& f, double a, double b, double tol, int max_depth) {
  const double m = 0.5 * (a + b);
  // segments are split exactly at declared kinks, where a piecewise
  // integrand's value belongs to the wrong side for one of its neighbors;
  // sample the two boundary points a hair inside instead
  const double scale = std::max(std::fabs(a), std::fabs(b));
  double eta = std::max(1e-10 * (b - a), 8.0 * std::numeric_limits<double>::epsilon() * scale);
  eta = std::min(eta, 0.25 * (b - a));
  const double fa = f(a + eta);
  const double fb = f(b - eta);
  const double fm = f(m);
  if (!(std::isfinite(fa) && std::isfinite(fb) && std::isfinite(fm))) {
    throw QuadratureError("quadrature failed");
  }
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace detail

template <class F>
double integrate_adaptive_simpson(F&& f, double a, double b,
                                  std::span<const double> breakpoints = {},
                                  double abs_tol = kQuadratureTol,
                                  int max_depth = kQuadratureMaxDepth) {
  if (!(a <= b)) throw DomainError("integration bounds must satisfy a <= b");
  if (a == b) return 0.0;

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double k : breakpoints) {
    if (k > a && k < b) cuts.push_back(k);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  const double total_len = b - a;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi <= lo) continue;
    const double tol = abs_tol * ((hi - lo) / total_len);
    sum += detail::simpson_segment(f, lo, hi, tol, max_depth);
  }
  return sum;
}

}  // namespace phasekit
