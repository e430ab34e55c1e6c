#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "phasekit/errors.hpp"

// Finite differences with kink and domain-edge handling.
//
// Step rule: h = step_factor * max(1, |x|), step_factor defaults to 1e-4.
// Central differences by default; within 2h of a kink or a domain edge the
// difference switches to the one-sided 3-point formula, which is the
// two-term Richardson extrapolation of the first-order one-sided slope:
//
//   f'(x) ~ (-3 f(x) + 4 f(x + h/2) - f(x + h)) / h        (right side)
//
// Exactly at a kink there is no derivative; differentiate() throws
// NonDifferentiableError carrying both one-sided values, measured just
// inside the adjacent pieces.

namespace phasekit {

struct DiffDomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  std::span<const double> kinks = {};
  double step_factor = 1e-4;
};

namespace detail {

template <class F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double one_sided_diff(F&& f, double x, double h) {
  // h may be negative for a left-sided difference
  return (-3.0 * f(x) + 4.0 * f(x + 0.5 * h) - f(x + h)) / h;
}

}  // namespace detail

template <class F>
double differentiate(F&& f, double x, const DiffDomain& dom) {
  if (!(x >= dom.lo && x <= dom.hi)) throw DomainError("derivative point outside domain");
  const double h = dom.step_factor * std::max(1.0, std::fabs(x));
  const double at_kink_tol = 1e-12 * std::max(1.0, std::fabs(x));

  // clearance to the nearest obstruction on each side
  double left_clear = x - dom.lo;
  double right_clear = dom.hi - x;
  for (double k : dom.kinks) {
    const double d = k - x;
    if (std::fabs(d) <= at_kink_tol) {
      // evaluate each one-sided derivative just inside the adjacent piece
      const double off = 2.0 * h;
      const double left = detail::one_sided_diff(f, x - off, -h);
      const double right = detail::one_sided_diff(f, x + off, h);
      throw NonDifferentiableError("non-differentiable point", left, right);
    }
    if (d > 0.0) {
      right_clear = std::min(right_clear, d);
    } else {
      left_clear = std::min(left_clear, -d);
    }
  }

  if (left_clear >= 2.0 * h && right_clear >= 2.0 * h) {
    return detail::central_diff(f, x, h);
  }
  if (right_clear >= left_clear) {
    const double hr = std::min(h, right_clear);
    if (!(hr > 0.0)) throw DomainError("derivative step does not fit domain");
    return detail::one_sided_diff(f, x, hr);
  }
  const double hl = std::min(h, left_clear);
  if (!(hl > 0.0)) throw DomainError("derivative step does not fit domain");
  return detail::one_sided_diff(f, x, -hl);
}

}  // namespace phasekit
