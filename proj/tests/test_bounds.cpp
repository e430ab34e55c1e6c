#include <cmath>
#include <optional>

#include "doctest.h"
#include "phasekit/bounds.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/mc.hpp"
#include "phasekit/model.hpp"

using namespace phasekit;

TEST_CASE("rate bound chain for the xor channel") {
  const auto model = validate_model(XorRandomChannel{1.0});
  const BoundChain chain = bound_chain(model, TrainingFraction(0.5));
  // frozen references computed from the closed-form integrand
  //   integral = tau * int_0^{1/tau-1} (1 - exp(-(tau/a)(1+eps))) d eps
  //            = 0.5 * (1 - 2 (exp(-1/2) - exp(-1)))
  const double want_integral = 0.5 * (1.0 - 2.0 * (std::exp(-0.5) - std::exp(-1.0)));
  CHECK(std::fabs(want_integral - 0.26134878145880891) < 1e-15);
  CHECK(std::fabs(chain.integral_bound - want_integral) < 1e-6);
  CHECK(std::fabs(chain.one_shot_bound - 0.19673467014368329) < 1e-6);
  CHECK(chain.integral_bound > chain.one_shot_bound);
}

TEST_CASE("bound chain edge cases") {
  const auto model = validate_model(XorRandomChannel{1.0});
  const BoundChain full = bound_chain(model, TrainingFraction(1.0));
  CHECK(full.integral_bound == 0.0);
  CHECK(full.one_shot_bound == 0.0);

  const BoundChain tight = bound_chain(model, TrainingFraction(0.9));
  CHECK(tight.integral_bound >= tight.one_shot_bound);
  CHECK(tight.one_shot_bound > 0.0);

  CHECK_THROWS_AS(bound_chain(validate_model(Repetition{}), TrainingFraction(0.5)), DomainError);
}

TEST_CASE("normal-weighted quadrature reproduces gaussian moments") {
  const auto nodes = gauss_hermite_normal(64);
  REQUIRE(nodes.size() == 64);
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m4 = 0.0, m6 = 0.0;
  for (const auto& [x, w] : nodes) {
    CHECK(w > 0.0);
    m0 += w;
    m1 += w * x;
    m2 += w * x * x;
    m4 += w * x * x * x * x;
    m6 += w * x * x * x * x * x * x;
  }
  CHECK(std::fabs(m0 - 1.0) < 1e-12);
  CHECK(std::fabs(m1) < 1e-12);
  CHECK(std::fabs(m2 - 1.0) < 1e-11);
  CHECK(std::fabs(m4 - 3.0) < 1e-10);
  CHECK(std::fabs(m6 - 15.0) < 1e-9);

  CHECK_THROWS_AS(gauss_hermite_normal(0), ValidationError);
}

TEST_CASE("gain bound with explicit samples") {
  const TrainingFraction tau(0.5);
  CHECK(scalar_gain_bound(validate_model(ScalarGainChannel{{1.0, 1.0}, std::nullopt}), tau) ==
        0.25);
  CHECK(scalar_gain_bound(validate_model(ScalarGainChannel{{0.0}, std::nullopt}), tau) == 0.0);
  CHECK(scalar_gain_bound(validate_model(ScalarGainChannel{{0.0, 1.0}, std::nullopt}), tau) ==
        doctest::Approx(0.125));
  CHECK_THROWS_AS(scalar_gain_bound(validate_model(XorRandomChannel{1.0}), tau), DomainError);
}

TEST_CASE("quadrature and sampling agree on the normal gain expectation") {
  const auto std_normal = validate_model(ScalarGainChannel{{}, NormalGain{0.0, 1.0}});
  const double via_quad = scalar_gain_bound(std_normal, TrainingFraction(0.5)) / 0.25;
  const Estimate via_mc = estimate_gain_expectation(std_normal, 400000, 17);
  CHECK(std::fabs(via_quad - via_mc.mean) <= via_mc.ci_half_width);

  const auto shifted = validate_model(ScalarGainChannel{{}, NormalGain{2.0, 0.5}});
  const double shifted_quad = scalar_gain_bound(shifted, TrainingFraction(0.5)) / 0.25;
  const Estimate shifted_mc = estimate_gain_expectation(shifted, 400000, 18);
  CHECK(std::fabs(shifted_quad - shifted_mc.mean) <= shifted_mc.ci_half_width);
  // a gain of about 2 carries more information than a unit gain
  CHECK(shifted_quad > via_quad);
}
