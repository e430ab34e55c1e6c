#pragma once

#include <span>
#include <utility>
#include <vector>

#include "phasekit/model.hpp"
#include "phasekit/types.hpp"

// Achievable-rate bounds.  The chain for the xor channel is
//
//   rate >= integral_0^{1/tau - 1} tau * I(X_eps; Y_eps) d eps
//        >= (1 - tau) * I(X; Y)
//
// with the integrand non-decreasing in eps, so the integral bound is always
// the tighter of the two.

namespace phasekit {

struct BoundChain {
  double integral_bound = 0.0;  // bits per received symbol
  double one_shot_bound = 0.0;  // (1 - tau) * I
};

// Computes both bounds for the xor channel, checking on eps_grid (or a
// default grid when empty) that the integrand is non-decreasing and that
// the chain ordering holds; violations throw NumericalError.
BoundChain bound_chain(const ValidatedModel& model, TrainingFraction tau,
                       std::span<const double> eps_grid = {});

// (1 - tau)/2 * E log2(1 + g^2) for the scalar gain channel; expectation by
// sample mean over an explicit gain list, or 64-point Gauss-Hermite
// quadrature when the gains are normally distributed.
double scalar_gain_bound(const ValidatedModel& model, TrainingFraction tau);

// Nodes and weights (x_i, w_i) with sum w_i f(x_i) ~ E f(X), X standard
// normal.  Derived from Gauss-Hermite quadrature by the sqrt(2) change of
// variables.
std::vector<std::pair<double, double>> gauss_hermite_normal(int n);

}  // namespace phasekit
