#include "phasekit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phasekit/analysis.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/quadrature.hpp"
#include "phasekit/surface.hpp"

namespace phasekit {

BoundChain bound_chain(const ValidatedModel& model, TrainingFraction tau,
                       std::span<const double> eps_grid) {
  if (!model.is<XorRandomChannel>()) {
    throw DomainError("bound chain defined for the xor channel");
  }
  const double hi = tau.max_offset();
  if (hi == 0.0) return BoundChain{0.0, 0.0};  // tau = 1: no data phase, rate 0

  const EntropySurface surface = entropy_surface(model);
  auto integrand = [&](double eps) {
    return mutual_information_at_offset(surface, tau, eps);
  };

  // the derivative gap must not decrease as the data phase progresses
  std::vector<double> grid(eps_grid.begin(), eps_grid.end());
  if (grid.empty()) {
    for (int i = 0; i <= 4; ++i) grid.push_back(hi * static_cast<double>(i) / 4.0);
  }
  std::sort(grid.begin(), grid.end());
  double prev = -1.0;
  for (double eps : grid) {
    const double v = integrand(eps);
    if (v < prev - 1e-9) throw NumericalError("offset mutual information not monotone");
    prev = v;
  }

  BoundChain out;
  out.integral_bound =
      tau.value() * integrate_adaptive_simpson(integrand, 0.0, hi);
  out.one_shot_bound = lower_bound_rate(surface, tau);
  if (out.integral_bound < out.one_shot_bound - 1e-9) {
    throw NumericalError("bound ordering violated");
  }
  return out;
}

double scalar_gain_bound(const ValidatedModel& model, TrainingFraction tau) {
  if (!model.is<ScalarGainChannel>()) {
    throw DomainError("gain bound defined for the scalar gain channel");
  }
  const auto& chan = model.as<ScalarGainChannel>();
  double mean = 0.0;
  if (!chan.gains.empty()) {
    for (double g : chan.gains) mean += std::log2(1.0 + g * g);
    mean /= static_cast<double>(chan.gains.size());
  } else if (chan.distribution) {
    const auto rule = gauss_hermite_normal(64);
    for (const auto& [x, w] : rule) {
      const double g = chan.distribution->mean + chan.distribution->stddev * x;
      mean += w * std::log2(1.0 + g * g);
    }
  } else {
    throw ValidationError("no gains");
  }
  return 0.5 * (1.0 - tau.value()) * mean;
}

std::vector<std::pair<double, double>> gauss_hermite_normal(int n) {
  if (n < 1) throw ValidationError("quadrature order must be >= 1");
  // Gauss-Hermite nodes/weights for integral e^{-t^2} f(t) dt by Newton
  // iteration on the orthonormal Hermite recurrence, then the change of
  // variables t -> sqrt(2) t, w -> w / sqrt(pi) for a standard normal.
  std::vector<std::pair<double, double>> rule(static_cast<std::size_t>(n));
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  const int half = (n + 1) / 2;
  std::vector<double> roots;  // descending, filled as found
  roots.reserve(static_cast<std::size_t>(half));
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // initial guess: asymptotic largest root, then step-downs extrapolated
    // from the roots already found
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[static_cast<std::size_t>(i - 2)];
    }
    double p2 = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = norm0;
      p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      const double pp = std::sqrt(2.0 * n) * p2;
      const double step = p1 / pp;
      z -= step;
      if (std::fabs(step) <= 1e-15 * std::max(1.0, std::fabs(z))) break;
    }
    roots.push_back(z);
    rule[static_cast<std::size_t>(i)].first = z;
    const double pp = std::sqrt(2.0 * n) * p2;
    rule[static_cast<std::size_t>(i)].second = 2.0 / (pp * pp);
  }
  // mirror to the negative half (middle node of odd n maps to itself)
  for (int i = 0; i < n / 2; ++i) {
    rule[static_cast<std::size_t>(n - 1 - i)].first = -rule[static_cast<std::size_t>(i)].first;
    rule[static_cast<std::size_t>(n - 1 - i)].second = rule[static_cast<std::size_t>(i)].second;
  }
  // normal-expectation form
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  for (auto& [x, w] : rule) {
    x *= std::numbers::sqrt2;
    w *= inv_sqrt_pi;
  }
  return rule;
}

}  // namespace phasekit
