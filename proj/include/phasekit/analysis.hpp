#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "phasekit/surface.hpp"
#include "phasekit/types.hpp"

// Phase curves and the quantities read off them.
//
// The two curves per model are the data-regime conditional entropy
// h_data(eps) = H(Y_eps | X_0) and the diagonal h_diag(eps) = H(Y_eps | X_eps),
// both in bits per training interval.  The one-shot mutual information is the
// gap of their right derivatives at eps -> 0+.

namespace phasekit {

// Curve value at offset eps.  For a model with vacuous conditioning both
// regimes coincide with the unconditioned surface.
double curve_value(const EntropySurface& surface, TrainingFraction tau, double eps,
                   Regime regime);

// Offsets where the curve has a kink (derivative jump).
std::vector<double> curve_kinks(const EntropySurface& surface, TrainingFraction tau,
                                Regime regime);

// d/d eps of the curve; throws NonDifferentiableError at a kink with both
// one-sided values attached.
double curve_derivative(const EntropySurface& surface, TrainingFraction tau, double eps,
                        Regime regime);

inline double h_prime_data(const EntropySurface& surface, TrainingFraction tau, double eps) {
  return curve_derivative(surface, tau, eps, Regime::data);
}
inline double h_prime_diag(const EntropySurface& surface, TrainingFraction tau, double eps) {
  return curve_derivative(surface, tau, eps, Regime::diagonal);
}

// Intercept at x = 0 of the least-squares line through (xs[i], ys[i]).
double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys);

struct MiDiagnostics {
  double data_limit = 0.0;  // lim eps->0+ h'_data
  double diag_limit = 0.0;  // lim eps->0+ h'_diag
  double raw = 0.0;         // data_limit - diag_limit
  double value = 0.0;       // raw clamped at 0
  bool suspicious = false;  // raw < -1e-9, points at a surface bug
};

// One-shot mutual information as the derivative gap at the training/data
// boundary, with each limit reached by extrapolating the derivative ladder
// eps in {1e-3, 5e-4, 2.5e-4} linearly to 0+.  Models with vacuous
// conditioning carry no information about the input and report 0.
MiDiagnostics one_shot_mutual_information(const EntropySurface& surface, TrainingFraction tau);

// Achievable-rate bound (1 - tau) * I from the one-shot mutual information.
double lower_bound_rate(const EntropySurface& surface, TrainingFraction tau);

// I(X_eps; Y_eps): the same derivative gap anchored at offset eps, used as
// the integrand of the tighter rate bound.  Requires 0 <= eps <= 1/tau - 1.
double mutual_information_at_offset(const EntropySurface& surface, TrainingFraction tau,
                                    double eps);

// | curve(eps) - integral_{-1}^{eps} H'(u) du | with the limiting law under
// the integral.  Zero (to quadrature tolerance) when the curve is the
// integral of its density; the spike's impulse shows up as a residual of
// exactly one bit.
double integral_consistency(const EntropySurface& surface, TrainingFraction tau, double eps,
                            Regime regime);

// Mean of the supplied per-symbol entropies over the window
//   t in [ceil((1 + eps - kappa/2) T), ceil((1 + eps + kappa/2) T) - 1],
// the discrete stand-in for the local average of H' around offset eps.
// Entries are (slot index, bits); every window index must be present.
double averaged_h_prime(std::span<const std::pair<std::int64_t, double>> per_symbol,
                        std::int64_t T, double eps, double kappa);

struct PhaseCurves {
  std::vector<double> eps;
  std::vector<double> h_data;
  std::vector<double> h_diag;
  std::vector<double> hprime_data;
  std::vector<double> hprime_diag;
  MiDiagnostics mi;
};

// Evaluates both curves and their derivatives on a grid.  Rows that land on
// a kink record the right one-sided derivative.  Grid points outside a
// curve's domain are rejected with DomainError.
PhaseCurves tabulate_phase_curves(const EntropySurface& surface, TrainingFraction tau,
                                  std::span<const double> grid);

}  // namespace phasekit
