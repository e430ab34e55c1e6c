#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "phasekit/errors.hpp"
#include "phasekit/model.hpp"
#include "phasekit/oracle.hpp"

using namespace phasekit;

// Hand-derived references for T = 2, L = 4, enumerating the 16 equally
// likely selection pairs (s0, s1):
//   distinct channels: 4 pairs give 1, 12 give 2      -> E = 28/16 = 1.75
//   P(s2 unseen)     : E[(L - distinct)/L] = 2.25/4   -> 0.5625
//   P(data slot seen): 1 - 0.5625                     -> 0.4375

TEST_CASE("closed forms hit the enumerated references") {
  const XorExactConfig cfg(2, 4, 4);
  CHECK(xor_block_entropy(cfg) == 1.75);
  CHECK(std::fabs(xor_unseen_probability(2, 4) - 0.5625) < 1e-14);
  CHECK(std::fabs(xor_finite_mutual_information(cfg) - 0.4375) < 1e-14);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(XorExactConfig(0, 1, 1));
  CHECK_THROWS_AS(XorExactConfig(-1, 4, 4), ValidationError);
  CHECK_THROWS_AS(XorExactConfig(2, 1, 4), ValidationError);  // block shorter than training
  CHECK_THROWS_AS(XorExactConfig(2, 4, 0), ValidationError);

  const XorExactConfig derived = XorExactConfig::from_rates(1000, 0.5, 1.0);
  CHECK(derived.B == 2000);
  CHECK(derived.L == 2000);
}

TEST_CASE("closed form equals exhaustive enumeration bit for bit") {
  for (std::int64_t L = 1; L <= 4; ++L) {
    for (std::int64_t T = 0; T <= 6; ++T) {
      const XorExactConfig cfg(T, T > 0 ? T : 1, L);
      CHECK(xor_block_entropy(cfg) == xor_block_entropy_bruteforce(cfg));
    }
  }
}

TEST_CASE("enumeration refuses oversized state spaces") {
  CHECK_THROWS_AS(xor_block_entropy_bruteforce(XorExactConfig(30, 30, 4)), BudgetError);
}

TEST_CASE("expected distinct count is the accumulated unseen mass") {
  for (std::int64_t L : {std::int64_t{3}, std::int64_t{10}}) {
    double sum = 0.0;
    for (std::int64_t t = 0; t < 50; ++t) sum += xor_unseen_probability(t, L);
    CHECK(std::fabs(xor_block_entropy(XorExactConfig(50, 50, L)) - sum) < 1e-12);
  }
}

TEST_CASE("degenerate sizes") {
  CHECK(xor_block_entropy(XorExactConfig(0, 1, 5)) == 0.0);
  CHECK(xor_block_entropy(XorExactConfig(3, 3, 1)) == 1.0);
  CHECK(xor_unseen_probability(0, 7) == 1.0);
  CHECK(xor_unseen_probability(0, 1) == 1.0);
  CHECK(xor_unseen_probability(3, 1) == 0.0);
  CHECK(xor_finite_mutual_information(XorExactConfig(0, 1, 5)) == 0.0);
  CHECK(xor_finite_mutual_information(XorExactConfig(3, 3, 1)) == 1.0);
}

TEST_CASE("per-slot conditional entropy by regime") {
  const XorExactConfig cfg(2, 4, 4);
  // diagonal: fresh training up to each slot, entropy = unseen probability
  CHECK(xor_conditional_entropy(0, cfg, Regime::diagonal) == 1.0);
  CHECK(std::fabs(xor_conditional_entropy(2, cfg, Regime::diagonal) - 0.5625) < 1e-14);
  // data: training clamped at T, slots past it are fully revealed bits
  CHECK(xor_conditional_entropy(2, cfg, Regime::data) == 1.0);
  CHECK(xor_conditional_entropy(3, cfg, Regime::data) == 1.0);
  CHECK_THROWS_AS(xor_conditional_entropy(1, cfg, Regime::data), ValidationError);
  CHECK_THROWS_AS(xor_conditional_entropy(4, cfg, Regime::diagonal), ValidationError);
  CHECK_THROWS_AS(xor_conditional_entropy(-1, cfg, Regime::diagonal), ValidationError);
}

TEST_CASE("per-symbol entropies of the input-free processes") {
  const auto stationary = validate_model(StationaryIid{0.7});
  CHECK(pedagogical_entropy(stationary, 0, 100) == 0.7);
  CHECK(pedagogical_entropy(stationary, 150, 100) == 0.7);

  const auto rep = validate_model(Repetition{});
  CHECK(pedagogical_entropy(rep, 99, 100) == 1.0);
  CHECK(pedagogical_entropy(rep, 100, 100) == 0.0);
  CHECK(pedagogical_entropy(rep, 500, 100) == 0.0);

  const auto osc = validate_model(Oscillation{});
  CHECK(pedagogical_entropy(osc, 0, 100) == 1.0);
  CHECK(pedagogical_entropy(osc, 1, 100) == 0.0);
  CHECK(pedagogical_entropy(osc, 1450, 1000) == 1.0);
  CHECK(pedagogical_entropy(osc, 1451, 1000) == 0.0);

  const auto spike = validate_model(UnboundedSpike{});
  CHECK(pedagogical_entropy(spike, 0, 1000) == 1.0);
  CHECK(pedagogical_entropy(spike, 497, 1000) == 1000.0);  // T/2 - 3
  CHECK(pedagogical_entropy(spike, 498, 1000) == 1.0);
  CHECK_THROWS_AS(pedagogical_entropy(spike, 0, 6), ValidationError);

  const auto xor_model = validate_model(XorRandomChannel{1.0});
  CHECK_THROWS_AS(pedagogical_entropy(xor_model, 0, 100), DomainError);
}

TEST_CASE("limiting per-symbol entropy density") {
  const auto xm = validate_model(XorRandomChannel{1.0});
  CHECK(std::fabs(limiting_h_prime(xm, 0.5, -0.5, Regime::data) - std::exp(-0.25)) < 1e-14);
  CHECK(limiting_h_prime(xm, 0.5, 0.3, Regime::data) == 1.0);
  CHECK(std::fabs(limiting_h_prime(xm, 0.5, 0.3, Regime::diagonal) - std::exp(-0.65)) < 1e-14);

  const auto rep = validate_model(Repetition{});
  CHECK(limiting_h_prime(rep, 0.5, -0.2, Regime::data) == 1.0);
  CHECK(limiting_h_prime(rep, 0.5, 0.2, Regime::data) == 0.0);

  const auto osc = validate_model(Oscillation{});
  CHECK(limiting_h_prime(osc, 0.5, 0.4, Regime::data) == 0.5);

  const auto spike = validate_model(UnboundedSpike{});
  CHECK(limiting_h_prime(spike, 0.5, -0.5, Regime::data) == 1.0);
  CHECK(limiting_h_prime(spike, 0.5, 0.5, Regime::data) == 1.0);

  const auto st = validate_model(StationaryIid{0.7});
  CHECK(limiting_h_prime(st, 0.5, 0.0, Regime::data) == 0.7);

  CHECK_THROWS_AS(limiting_h_prime(xm, 0.5, -1.5, Regime::data), ValidationError);
}
