#pragma once

#include <span>
#include <vector>

#include "phasekit/model.hpp"
#include "phasekit/types.hpp"

namespace phasekit {

// Normalized conditional entropy generator F(tau, eps) = H(Y_eps | X) in
// bits per training interval.  For the input-free processes F is the
// unconditioned curve H(Y_eps) and extends to eps > -1; for the xor channel
// the generator convention applies and eps must be >= 0 (negative offsets
// are reached through scale_surface).
class EntropySurface {
 public:
  explicit EntropySurface(ValidatedModel model);

  double eval(TrainingFraction tau, double eps) const;
  const std::vector<double>& kinks() const noexcept { return kinks_; }
  bool conditioning_vacuous() const noexcept { return model_.conditioning_vacuous(); }
  const ValidatedModel& model() const noexcept { return model_; }

 private:
  ValidatedModel model_;
  std::vector<double> kinks_;
};

// Builds the closed-form surface for a model; throws DomainError
// ("unsupported surface") for the scalar gain channel, which has no
// discrete entropy surface.
EntropySurface entropy_surface(const ValidatedModel& model);

struct ScaledEntropyPoint {
  double eps = 0.0;
  double delta = 0.0;
  double value = 0.0;  // H(Y_eps | X_delta) in bits per training interval
};

// Rescaling identity for the conditional-entropy family: with
// u = min(eps, delta),
//
//   H(Y_eps | X_delta) = (1 + u) * F((1 + u) * tau, (eps - u) / (1 + delta))
//
// Needs eps, delta > -1 and (1 + u) * tau <= 1, else DomainError.  Only the
// smaller offset is pinned to the block so derivative probes can step a
// hair past the far edge.
ScaledEntropyPoint scale_surface(const EntropySurface& surface, TrainingFraction tau,
                                 double eps, double delta);

}  // namespace phasekit
