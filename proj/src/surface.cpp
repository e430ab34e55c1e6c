#include "phasekit/surface.hpp"

#include <cmath>

namespace phasekit {

namespace {

std::vector<double> surface_kinks(const ValidatedModel& model) {
  if (model.is<Repetition>()) return {0.0};
  if (model.is<UnboundedSpike>()) return {-0.5};
  return {};
}

}  // namespace

EntropySurface::EntropySurface(ValidatedModel model)
    : model_(std::move(model)), kinks_(surface_kinks(model_)) {}

EntropySurface entropy_surface(const ValidatedModel& model) {
  if (model.is<ScalarGainChannel>()) {
    throw DomainError("unsupported surface: scalar gain channel has no discrete entropy surface");
  }
  return EntropySurface(model);
}

double EntropySurface::eval(TrainingFraction tau, double eps) const {
  if (model_.is<XorRandomChannel>()) {
    if (eps < 0.0) throw DomainError("surface defined for eps >= 0");
    const double a = model_.as<XorRandomChannel>().a;
    const double t = tau.value();
    // (a / tau) * (1 - exp(-tau / a)) + eps, written with expm1 so small
    // tau / a stays accurate
    return (a / t) * (-std::expm1(-t / a)) + eps;
  }
  if (eps <= -1.0) throw DomainError("surface defined for eps > -1");
  if (model_.is<StationaryIid>()) {
    return (1.0 + eps) * model_.as<StationaryIid>().entropy_rate;
  }
  if (model_.is<Repetition>()) {
    return std::min(1.0 + eps, 1.0);
  }
  if (model_.is<Oscillation>()) {
    return 0.5 * (1.0 + eps);
  }
  // UnboundedSpike: one symbol of entropy T sits at relative position 1/2,
  // contributing a unit jump at eps = -1/2 in the normalized curve.
  if (eps < -0.5) return 1.0 + eps;
  return 2.0 + eps;
}

ScaledEntropyPoint scale_surface(const EntropySurface& surface, TrainingFraction tau,
                                 double eps, double delta) {
  if (!(eps > -1.0) || !std::isfinite(eps)) throw DomainError("eps must be > -1");
  if (!(delta > -1.0) || !std::isfinite(delta)) throw DomainError("delta must be > -1");
  const double u = std::min(eps, delta);
  const double scaled_tau = (1.0 + u) * tau.value();
  if (scaled_tau > 1.0 + 1e-12) {
    throw DomainError("scaled training fraction out of range");
  }
  TrainingFraction inner_tau(std::min(scaled_tau, 1.0));
  const double inner_eps = (eps - u) / (1.0 + delta);
  const double value = (1.0 + u) * surface.eval(inner_tau, inner_eps);
  return {eps, delta, value};
}

}  // namespace phasekit
