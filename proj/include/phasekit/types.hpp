#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "phasekit/errors.hpp"

namespace phasekit {

// Ceiling of a real-valued index expression with a small relative guard, so
// that expressions like 0.443*1000 or 1.45*T land on the intended integer
// instead of being pushed up by one ulp of rounding.
inline std::int64_t index_ceil(double x) {
  const double guard = 1e-9 * std::max(1.0, std::fabs(x));
  return static_cast<std::int64_t>(std::ceil(x - guard));
}

// Floor with the same guard, for budget expressions like 0.24*20000 where
// one ulp down would drop a whole unit.
inline std::int64_t index_floor(double x) {
  const double guard = 1e-9 * std::max(1.0, std::fabs(x));
  return static_cast<std::int64_t>(std::floor(x + guard));
}

// Fraction of a block spent on training, tau in (0, 1].
class TrainingFraction {
 public:
  explicit TrainingFraction(double value) : value_(value) {
    if (!(std::isfinite(value) && value > 0.0 && value <= 1.0)) {
      throw ValidationError("tau must be in (0, 1]");
    }
  }
  double value() const noexcept { return value_; }
  // Largest phase offset that stays inside one block: eps <= 1/tau - 1.
  double max_offset() const noexcept { return 1.0 / value_ - 1.0; }

 private:
  double value_;
};

// Relative position eps of a symbol inside a block; index ceil((1+eps)T).
// eps = 0 is the training/data boundary, eps = 1/tau - 1 the block end.
class PhaseOffset {
 public:
  explicit PhaseOffset(double value) : value_(value) {
    if (!(std::isfinite(value) && value >= -1.0)) {
      throw ValidationError("eps must be >= -1");
    }
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// Which conditioning the phase curve carries: the data regime conditions on
// the training inputs only (delta = 0), the diagonal regime on inputs up to
// the current symbol (delta = eps).
enum class Regime { data, diagonal };

// Checks the pairing constraint eps <= 1/tau - 1 (with an ulp guard).
inline void require_offset_in_block(double eps, TrainingFraction tau, const char* what) {
  if (eps > tau.max_offset() * (1.0 + 1e-12) + 1e-15) {
    throw DomainError(std::string(what) + ": eps exceeds 1/tau - 1");
  }
}

}  // namespace phasekit
