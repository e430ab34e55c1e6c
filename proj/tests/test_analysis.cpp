#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "phasekit/analysis.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/model.hpp"
#include "phasekit/surface.hpp"

using namespace phasekit;

namespace {

EntropySurface xor_surface(double a) { return entropy_surface(validate_model(XorRandomChannel{a})); }

}  // namespace

TEST_CASE("curve values by regime") {
  const EntropySurface s = xor_surface(1.0);
  const TrainingFraction tau(0.5);
  const double base = 2.0 * (1.0 - std::exp(-0.5));

  CHECK(std::fabs(curve_value(s, tau, 0.4, Regime::data) - (base + 0.4)) < 1e-13);
  const double diag_want = (1.0 / (1.4 * 0.5)) * 1.4 * (1.0 - std::exp(-0.5 * 1.4));
  CHECK(std::fabs(curve_value(s, tau, 0.4, Regime::diagonal) - diag_want) < 1e-13);

  // below the boundary the two regimes coincide
  CHECK(std::fabs(curve_value(s, tau, -0.3, Regime::data) -
                  curve_value(s, tau, -0.3, Regime::diagonal)) < 1e-13);

  const EntropySurface osc = entropy_surface(validate_model(Oscillation{}));
  CHECK(curve_value(osc, tau, 0.4, Regime::data) == doctest::Approx(0.7));
  CHECK(curve_kinks(osc, tau, Regime::data).empty());
  CHECK(curve_kinks(s, tau, Regime::data) == std::vector<double>{0.0});
  CHECK(curve_kinks(s, tau, Regime::diagonal).empty());
}

TEST_CASE("least squares extrapolation recovers a line's intercept") {
  const std::vector<double> xs = {1e-3, 5e-4, 2.5e-4};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 - 2.0 * x);
  CHECK(std::fabs(extrapolate_to_zero(xs, ys) - 3.0) < 1e-12);

  CHECK_THROWS_AS(extrapolate_to_zero(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  ValidationError);
  CHECK_THROWS_AS(extrapolate_to_zero(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}),
                  ValidationError);
}

TEST_CASE("one-shot information matches the closed form") {
  const EntropySurface s = xor_surface(1.0);
  const MiDiagnostics mi = one_shot_mutual_information(s, TrainingFraction(0.5));
  CHECK(std::fabs(mi.value - 0.39346934028736658) < 1e-6);
  CHECK(std::fabs(mi.data_limit - 1.0) < 1e-6);
  CHECK(std::fabs(mi.diag_limit - std::exp(-0.5)) < 1e-6);
  CHECK_FALSE(mi.suspicious);
  CHECK(mi.value == mi.raw);

  CHECK(std::fabs(lower_bound_rate(s, TrainingFraction(0.5)) - 0.19673467014368329) < 1e-6);

  // vacuous conditioning carries no information
  const EntropySurface osc = entropy_surface(validate_model(Oscillation{}));
  const MiDiagnostics none = one_shot_mutual_information(osc, TrainingFraction(0.5));
  CHECK(none.value == 0.0);
  CHECK(std::fabs(none.raw) < 1e-12);
}

TEST_CASE("offset information interpolates the closed form and grows with eps") {
  const EntropySurface s = xor_surface(1.0);
  const TrainingFraction tau(0.5);
  double prev = -1.0;
  for (double eps : {0.0, 0.25, 0.5, 1.0}) {
    const double got = mutual_information_at_offset(s, tau, eps);
    const double want = 1.0 - std::exp(-0.5 * (1.0 + eps));
    CHECK(std::fabs(got - want) < 1e-6);
    CHECK(got > prev);
    prev = got;
  }
  CHECK(mutual_information_at_offset(entropy_surface(validate_model(Repetition{})), tau, 0.5) ==
        0.0);
  CHECK_THROWS_AS(mutual_information_at_offset(s, tau, -0.1), DomainError);
  CHECK_THROWS_AS(mutual_information_at_offset(s, tau, 1.5), DomainError);
}

TEST_CASE("derivatives and the boundary kink") {
  const EntropySurface s = xor_surface(1.0);
  const TrainingFraction tau(0.5);

  CHECK(std::fabs(curve_derivative(s, tau, 0.3, Regime::data) - 1.0) < 1e-8);
  CHECK(std::fabs(curve_derivative(s, tau, -0.3, Regime::data) - std::exp(-0.5 * 0.7)) < 1e-8);
  CHECK(std::fabs(curve_derivative(s, tau, 0.3, Regime::diagonal) - std::exp(-0.5 * 1.3)) <
        1e-8);

  try {
    curve_derivative(s, tau, 0.0, Regime::data);
    FAIL("expected a kink at the training boundary");
  } catch (const NonDifferentiableError& e) {
    // one-sided slopes are sampled 2h inside each piece, so allow the drift
    CHECK(std::fabs(e.left - std::exp(-0.5)) < 1e-3);
    CHECK(std::fabs(e.right - 1.0) < 1e-6);
  }
}

TEST_CASE("integral consistency") {
  const TrainingFraction tau(0.5);

  const EntropySurface s = xor_surface(1.0);
  CHECK(integral_consistency(s, tau, 0.5, Regime::data) < 1e-9);
  CHECK(integral_consistency(s, tau, 0.8, Regime::diagonal) < 1e-9);
  CHECK(integral_consistency(s, tau, -0.4, Regime::data) < 1e-9);

  const EntropySurface rep = entropy_surface(validate_model(Repetition{}));
  CHECK(integral_consistency(rep, tau, 0.7, Regime::data) < 1e-9);

  // the spike's impulse is invisible to the limiting density: one whole bit
  const EntropySurface spike = entropy_surface(validate_model(UnboundedSpike{}));
  CHECK(std::fabs(integral_consistency(spike, tau, 0.0, Regime::data) - 1.0) < 1e-9);
  CHECK(integral_consistency(spike, tau, -0.7, Regime::data) < 1e-9);
}

TEST_CASE("windowed average of per-symbol entropies") {
  // half ones, half zeros across the window [10, 20)
  std::vector<std::pair<std::int64_t, double>> entries;
  for (std::int64_t t = 10; t < 20; ++t) entries.emplace_back(t, t < 15 ? 1.0 : 0.0);
  CHECK(averaged_h_prime(entries, 10, 0.5, 1.0) == 0.5);

  // a missing slot inside the window is an error, not a silent skip
  entries.erase(entries.begin() + 3);
  CHECK_THROWS_AS(averaged_h_prime(entries, 10, 0.5, 1.0), ValidationError);

  CHECK_THROWS_AS(averaged_h_prime(entries, 10, 0.5, 0.0), ValidationError);
  CHECK_THROWS_AS(averaged_h_prime(entries, 0, 0.5, 1.0), ValidationError);
}

TEST_CASE("tabulated curves carry right slopes at kinks") {
  const EntropySurface s = xor_surface(1.0);
  const TrainingFraction tau(0.5);
  const std::vector<double> grid = {-0.5, 0.0, 0.5};
  const PhaseCurves curves = tabulate_phase_curves(s, tau, grid);
  REQUIRE(curves.eps.size() == 3);
  CHECK(curves.h_data.size() == 3);
  CHECK(std::fabs(curves.hprime_data[1] - 1.0) < 1e-6);  // right slope at the kink
  CHECK(std::fabs(curves.hprime_diag[1] - std::exp(-0.5)) < 1e-5);
  CHECK(std::fabs(curves.mi.value - 0.39346934028736658) < 1e-6);
  CHECK(curves.h_data[2] > curves.h_diag[2]);  // conditioning can only help
}
