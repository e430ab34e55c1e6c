#include "phasekit/optimize.hpp"

#include <cmath>
#include <functional>

#include "phasekit/analysis.hpp"
#include "phasekit/surface.hpp"

namespace phasekit {

TauOptResult optimize_tau(const ValidatedModel& model, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("tolerance must be positive");

  std::function<double(double)> info;
  if (model.is<XorRandomChannel>()) {
    const double a = model.as<XorRandomChannel>().a;
    info = [a](double tau) { return -std::expm1(-tau / a); };
  } else {
    // one surface, re-shot at each candidate tau
    auto surface = entropy_surface(model);
    info = [surface](double tau) {
      return one_shot_mutual_information(surface, TrainingFraction(tau)).value;
    };
  }
  auto objective = [&](double tau) { return (1.0 - tau) * info(tau); };

  // scan tau = i/65, i = 1..64, to bracket the global maximum
  constexpr int kGridPoints = 64;
  int best = 0;
  double best_value = -1.0;
  double grid[kGridPoints];
  for (int i = 0; i < kGridPoints; ++i) {
    grid[i] = static_cast<double>(i + 1) / (kGridPoints + 1);
    const double v = objective(grid[i]);
    if (!std::isfinite(v)) throw NumericalError("objective evaluation failed");
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = best > 0 ? grid[best - 1] : 1e-12;
  const double hi = best + 1 < kGridPoints ? grid[best + 1] : 1.0 - 1e-12;

  TauOptResult out;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.tau_opt = golden_section_maximize(objective, lo, hi, tol);
  out.i_at_opt = info(out.tau_opt);
  out.r_opt = (1.0 - out.tau_opt) * out.i_at_opt;
  if (!std::isfinite(out.r_opt)) throw NumericalError("objective evaluation failed");
  return out;
}

std::optional<double> asymptotic_tau_reference(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("a must be positive");
  if (a <= 0.01) return -a * std::log(a);
  if (a >= 100.0) return 0.5;
  if (a == std::exp(-1.0)) return std::exp(-1.0);
  return std::nullopt;
}

}  // namespace phasekit
