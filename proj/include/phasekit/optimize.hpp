#pragma once

#include <cmath>
#include <optional>

#include "phasekit/errors.hpp"
#include "phasekit/model.hpp"

// Training-fraction optimization: maximize the rate proxy
// phi(tau) = (1 - tau) * I(tau) over tau in (0, 1).

namespace phasekit {

struct TauOptResult {
  double tau_opt = 0.0;
  double i_at_opt = 0.0;   // bits per symbol
  double r_opt = 0.0;      // (1 - tau_opt) * i_at_opt, bits per received symbol
  double bracket_lo = 0.0; // bracket handed to the refinement stage
  double bracket_hi = 0.0;
};

// Golden-section maximization of a unimodal-on-the-bracket objective.
// Shrinks [lo, hi] to width tol and returns the best midpoint.
template <class F>
double golden_section_maximize(F&& f, double lo, double hi, double tol) {
  if (!(hi > lo)) throw ValidationError("bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

// Grid scan over 64 interior points to bracket the global maximum, then
// golden-section refinement to width tol.  For the xor channel the
// information curve I(tau) = 1 - e^{-tau/a} is used in closed form; other
// models fall back to the extrapolated one-shot mutual information.
TauOptResult optimize_tau(const ValidatedModel& model, double tol = 1e-9);

// Closed-form reference for the optimal training fraction in the asymptotic
// regimes: -a ln a for a <= 0.01, 1/2 for a >= 100, 1/e at a = 1/e exactly.
// Empty outside those regimes.
std::optional<double> asymptotic_tau_reference(double a);

}  // namespace phasekit
