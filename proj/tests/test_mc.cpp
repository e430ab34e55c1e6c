#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "phasekit/errors.hpp"
#include "phasekit/mc.hpp"
#include "phasekit/model.hpp"
#include "phasekit/oracle.hpp"

using namespace phasekit;

TEST_CASE("trajectories respect the channel law") {
  SimConfig cfg{5, 0.5, 1.2, 3, 9};
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    const Trajectory tr = simulate_trajectory(cfg, trial);
    REQUIRE(tr.inputs.size() == static_cast<std::size_t>(B));
    REQUIRE(tr.selections.size() == static_cast<std::size_t>(B));
    REQUIRE(tr.states.size() == static_cast<std::size_t>(L));
    REQUIRE(tr.outputs.size() == static_cast<std::size_t>(B));
    for (std::int64_t t = 0; t < B; ++t) {
      const std::int64_t k = tr.selections[static_cast<std::size_t>(t)];
      REQUIRE(k >= 1);
      REQUIRE(k <= L);
      if (t < cfg.training_len) CHECK_FALSE(tr.inputs[static_cast<std::size_t>(t)]);
      CHECK(tr.outputs[static_cast<std::size_t>(t)] ==
            (tr.inputs[static_cast<std::size_t>(t)] ^
             tr.states[static_cast<std::size_t>(k - 1)]));
    }
  }
}

TEST_CASE("estimates are deterministic in the seed") {
  SimConfig cfg{2, 0.5, 1.0, 5000, 42};
  const Estimate a = estimate_unseen_probability(cfg, 2);
  const Estimate b = estimate_unseen_probability(cfg, 2);
  CHECK(a.mean == b.mean);
  CHECK(a.ci_half_width == b.ci_half_width);
  CHECK(a.trials == 5000);

  SimConfig other = cfg;
  other.seed = 43;
  CHECK(estimate_unseen_probability(other, 2).mean != a.mean);
}

TEST_CASE("degenerate slots have exact estimates with zero width") {
  SimConfig cfg{2, 0.5, 1.0, 2000, 0};
  const Estimate at_zero = estimate_unseen_probability(cfg, 0);
  CHECK(at_zero.mean == 1.0);
  CHECK(at_zero.ci_half_width == 0.0);

  const Estimate one_slot = estimate_distinct_channels(cfg, 1);
  CHECK(one_slot.mean == 1.0);
  CHECK(one_slot.ci_half_width == 0.0);

  SimConfig no_training{0, 0.5, 1.0, 2000, 0};
  const Estimate no_info = estimate_data_phase_mi(no_training);
  CHECK(no_info.mean == 0.0);
  CHECK(no_info.ci_half_width == 0.0);
  CHECK(no_info.trials == 2000);
}

TEST_CASE("slot bounds are enforced") {
  SimConfig cfg{2, 0.5, 1.0, 100, 0};  // B = 4
  CHECK_THROWS_AS(estimate_unseen_probability(cfg, -1), ValidationError);
  CHECK_THROWS_AS(estimate_unseen_probability(cfg, 4), ValidationError);
  CHECK_NOTHROW(estimate_distinct_channels(cfg, 4));
  CHECK_THROWS_AS(estimate_distinct_channels(cfg, 0), ValidationError);
  CHECK_THROWS_AS(estimate_distinct_channels(cfg, 5), ValidationError);

  SimConfig full{4, 1.0, 1.0, 100, 0};  // T = B = 4, no data slot
  CHECK_THROWS_AS(estimate_data_phase_mi(full), DomainError);
}

TEST_CASE("estimators stay calibrated across seeds") {
  // 100 independent runs; the 3 sigma interval should cover the exact value
  // in all but a few, and the worst few should still be close
  const double exact = xor_unseen_probability(2, 4);
  int covered = 0;
  double mean_of_means = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SimConfig cfg{2, 0.5, 1.0, 2000, seed};
    const Estimate e = estimate_unseen_probability(cfg, 2);
    mean_of_means += e.mean;
    if (std::fabs(e.mean - exact) <= e.ci_half_width) ++covered;
  }
  mean_of_means /= 100.0;
  CHECK(covered >= 97);
  // the grand mean sharpens by another factor of 10
  CHECK(std::fabs(mean_of_means - exact) < 0.0020);
}

TEST_CASE("interval width shrinks like one over sqrt trials") {
  SimConfig small{2, 0.5, 1.0, 2000, 7};
  SimConfig large{2, 0.5, 1.0, 8000, 7};
  const double ratio = estimate_unseen_probability(small, 1).ci_half_width /
                       estimate_unseen_probability(large, 1).ci_half_width;
  CHECK(ratio > 1.6);
  CHECK(ratio < 2.4);
}

TEST_CASE("estimates land within their own intervals of the exact values") {
  SimConfig cfg{2, 0.5, 1.0, 20000, 1};
  const std::int64_t L = cfg.channels();

  const Estimate unseen = estimate_unseen_probability(cfg, 2);
  CHECK(std::fabs(unseen.mean - xor_unseen_probability(2, L)) <= unseen.ci_half_width);
  CHECK(unseen.ci_half_width > 0.0);

  const Estimate distinct = estimate_distinct_channels(cfg, 2);
  CHECK(std::fabs(distinct.mean - xor_block_entropy(XorExactConfig(2, 4, L))) <=
        distinct.ci_half_width);

  const Estimate mi = estimate_data_phase_mi(cfg);
  CHECK(std::fabs(mi.mean - xor_finite_mutual_information(XorExactConfig(2, 4, L))) <=
        mi.ci_half_width);
}

TEST_CASE("gain expectation handles explicit lists exactly") {
  const auto listed = validate_model(ScalarGainChannel{{0.0, 1.0, 1.0}, std::nullopt});
  const Estimate e = estimate_gain_expectation(listed, 10, 0);
  // log2(1 + g^2) over the list: {0, 1, 1}
  CHECK(e.mean == doctest::Approx(2.0 / 3.0));
  CHECK(e.trials == 3);

  const auto constant = validate_model(ScalarGainChannel{{1.0, 1.0}, std::nullopt});
  CHECK(estimate_gain_expectation(constant, 10, 0).ci_half_width == 0.0);

  const auto normal = validate_model(ScalarGainChannel{{}, NormalGain{0.0, 1.0}});
  CHECK_THROWS_AS(estimate_gain_expectation(normal, 0, 0), ValidationError);
  const Estimate n1 = estimate_gain_expectation(normal, 5000, 3);
  const Estimate n2 = estimate_gain_expectation(normal, 5000, 3);
  CHECK(n1.mean == n2.mean);
}
